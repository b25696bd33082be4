//! Acceptance criteria. Runs without the test harness so that every
//! criterion prints one PASS/FAIL line; exits non-zero if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hecke_core::hecke_algebra::{algebra, check_relations};
use hecke_core::intertwiner_rank1::{
    char_sum, composite_scalar, j_matrix, reciprocal_profile, reducibility_points, Direction as JDirection,
    FiniteCharacter,
};
use hecke_core::isogeny_transfer::{class_preserved, roundtrip_check, CaseKind, Component, TransferCase};
use hecke_core::label_params::{LabelFunction, ParamPair};
use hecke_core::mu_function::{mu_factor, poles_zeros, profile_of, q_from_poles, PzEntry};
use hecke_core::param_catalog::cases::CaseStatus;
use hecke_core::param_catalog::{
    case_conformance, case_db, case_lookup, classical_bound_check, classical_labels, parity_rule, reduced_match,
    unitary_ps_descriptor, CaseTag, ClassicalFamily, GroupFamily, Table1Labels, UnitarySignature,
};
use hecke_core::root_data::{BasedRootDatum, CartanType, RootSystem, WeylGroup};
use hecke_core::{Coeff, Coeff2, Rat};
use num_traits::{One, Zero};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_s: u64) -> Result<(), String> {
    ensure(elapsed < Duration::from_secs(limit_s), || {
        format!("took {:.1}s, limit {limit_s}s", elapsed.as_secs_f64())
    })
}

fn system(name: &str) -> RootSystem {
    RootSystem::new(&[name.parse::<CartanType>().unwrap()]).unwrap()
}

fn algebra_consistency() -> Outcome {
    let start = Instant::now();
    let mut done = Vec::new();
    for (ty, labels) in [("A1", "1,1"), ("A2", "2,2"), ("B2", "3,3,1"), ("G2", "1,3")] {
        let rs = system(ty);
        let lf = LabelFunction::parse(&rs, labels).map_err(|e| e.to_string())?;
        let h = algebra(BasedRootDatum::adjoint(rs), lf).map_err(|e| e.to_string())?;
        let r = check_relations(&h, 100, 2024).map_err(|e| e.to_string())?;
        let bad: Vec<_> = r.checks.iter().filter(|c| c.failures > 0).map(|c| c.name.clone()).collect();
        ensure(r.passed && bad.is_empty(), || format!("{ty}: failing checks {bad:?}"))?;
        let needed: &[&str] = if h.rank() > 1 { &["quadratic", "braid", "associativity"] } else { &["quadratic", "associativity"] };
        for &name in needed {
            let c = r.checks.iter().find(|c| c.name == name);
            ensure(c.is_some_and(|c| c.cases > 0), || format!("{ty}: no {name} cases ran"))?;
        }
        done.push(format!("{ty} {:.1}s", start.elapsed().as_secs_f64()));
    }
    within(start.elapsed(), 60)?;
    Ok(format!("100 seeded triples each; cumulative {}", done.join(", ")))
}

fn intertwiner_identity() -> Outcome {
    let start = Instant::now();
    // the composite scalar written out independently
    let q_inv = Coeff2::constant(Coeff::var_pow(-2));
    let one = Coeff2::one();
    let z = Coeff2::var();
    let c = one.clone() - q_inv.clone();
    let expected = q_inv + c.clone() * c / ((one.clone() - z) * (one - Coeff2::var_pow(-1)));
    ensure(composite_scalar() == expected, || "composite scalar differs from its closed form".into())?;
    let (fwd, back) = (j_matrix(JDirection::POp), j_matrix(JDirection::P));
    for (name, p) in [("back*fwd", back.mul(&fwd)), ("fwd*back", fwd.mul(&back))] {
        ensure(p[0][0] == expected && p[1][1] == expected, || format!("{name}: diagonal is not the scalar"))?;
        ensure(p[0][1].is_zero() && p[1][0].is_zero(), || format!("{name}: off-diagonal entries survive"))?;
    }
    within(start.elapsed(), 1)?;
    Ok("both orders give composite_scalar * id".into())
}

fn entry(sign: i8, exp: i64, ord: u32) -> PzEntry {
    PzEntry { sign, exp: Rat::from_integer(exp), ord }
}

fn reducibility() -> Outcome {
    let start = Instant::now();
    let p = reducibility_points().map_err(|e| e.to_string())?;
    ensure(p == ParamPair::ints(1, 0).unwrap(), || format!("reducibility points {p}"))?;
    let recip = reciprocal_profile();
    ensure(recip.poles == vec![entry(1, -1, 1), entry(1, 1, 1)], || {
        format!("poles of 1/scalar: {:?}", recip.poles)
    })?;
    let direct = profile_of(&composite_scalar()).map_err(|e| e.to_string())?;
    ensure(direct.poles.contains(&entry(1, 0, 2)), || "no pole of the scalar at z = 1".into())?;
    ensure(recip.zeros == vec![entry(1, 0, 2)], || format!("zeros of 1/scalar: {:?}", recip.zeros))?;
    within(start.elapsed(), 1)?;
    Ok("(q_F, 1); poles of 1/scalar {q_F, q_F^-1}; double pole of the scalar at z = 1".into())
}

fn mu_roundtrip() -> Outcome {
    let start = Instant::now();
    let mut n = 0;
    for a2 in 0..=8i64 {
        for s2 in 0..=a2 {
            let (a, s) = (Rat::new(a2, 2), Rat::new(s2, 2));
            let f = mu_factor(a, s, Rat::from_integer(1)).map_err(|e| e.to_string())?;
            let back = q_from_poles(&poles_zeros(&f)).map_err(|e| format!("({a}, {s}): {e}"))?;
            ensure(back == ParamPair::new(a, s).unwrap(), || format!("({a}, {s}) came back as {back}"))?;
            n += 1;
        }
    }
    within(start.elapsed(), 5)?;
    Ok(format!("{n} exponent pairs"))
}

fn conformance_sweep() -> Outcome {
    let start = Instant::now();
    let mut families = Vec::new();
    for f in 1..=2u32 {
        for t in 1..=3u32 {
            families.push(ClassicalFamily::case_c(f, t));
            for a_plus in 1..=6 {
                families.push(ClassicalFamily::case_a(f, t, a_plus));
            }
            let group = if f == 2 { GroupFamily::UnramifiedSu } else { GroupFamily::OtherClassical };
            let rule = parity_rule(group, t).map_err(|e| e.to_string())?;
            for a in -1..=6 {
                for a_minus in -1..=a {
                    if rule.admits(a, a_minus) {
                        families.push(ClassicalFamily::case_b(f, t, a, a_minus));
                    }
                }
            }
        }
    }
    let mut checked = 0;
    for fam in &families {
        classical_labels(fam).map_err(|e| format!("{fam:?}: {e}"))?;
        for rank in 1..=3 {
            let (rs, lf) = fam.component(rank).map_err(|e| e.to_string())?;
            let (_, m) = reduced_match(&rs, &lf).map_err(|e| e.to_string())?;
            ensure(m.iter().all(|c| c.matched.is_some()), || {
                format!("case {} f={} t={} a+={} a={} a-={} rank {rank}: no row", fam.case_tag, fam.f, fam.t, fam.a_plus, fam.a, fam.a_minus)
            })?;
            checked += 1;
        }
    }
    let tags = families.iter().map(|f| f.case_tag).collect::<std::collections::BTreeSet<CaseTag>>();
    ensure(tags.len() == 3, || "not every case tag was swept".into())?;
    let mut unitary = 0;
    for n in 2..=9 {
        for ramified in [false, true] {
            for sig in UnitarySignature::all(n, ramified) {
                for c in unitary_ps_descriptor(n, ramified, &sig).map_err(|e| e.to_string())? {
                    if let Some(lf) = &c.labels {
                        let (_, m) = reduced_match(&c.system, lf).map_err(|e| e.to_string())?;
                        ensure(m.iter().all(|x| x.matched.is_some()), || {
                            format!("U_{n} ramified={ramified} {sig}: {:?} has no row", c.cartan)
                        })?;
                    }
                    unitary += 1;
                }
            }
        }
    }
    within(start.elapsed(), 30)?;
    Ok(format!("{checked} classical components, {unitary} unitary factors"))
}

fn bound_checks() -> Outcome {
    // (family, expected pass, expected lhs) with lhs worked out by hand
    let cases = [
        (ClassicalFamily::case_b(1, 1, 3, 1).with_dims(6, 1), true, 4 + 1),
        (ClassicalFamily::case_a(1, 1, 3).with_dims(4, 1), true, 9),
        (ClassicalFamily::case_a(1, 1, 4).with_dims(4, 1), false, 16),
        (ClassicalFamily::case_b(1, 1, 5, -1).with_dims(8, 1), false, 9),
    ];
    for (fam, pass, lhs) in &cases {
        let (pass, lhs) = (*pass, *lhs);
        let b = classical_bound_check(fam).map_err(|e| e.to_string())?;
        ensure(b.pass == pass && b.lhs == lhs, || format!("{fam:?} gave {b:?}"))?;
    }
    let slack_of = |fam: ClassicalFamily| classical_bound_check(&fam).map(|b| b.slack);
    ensure(slack_of(cases[0].0.clone()) == Ok(Rat::from_integer(1)), || "slack of a=3, a-=1 is not 1".into())?;
    ensure(slack_of(cases[1].0.clone()) == Ok(Rat::from_integer(0)), || "slack of a+=3 is not 0".into())?;
    Ok("3 worked instances and a=5, a-=-1 at N/d=8 (9 > 8)".into())
}

fn isogeny() -> Outcome {
    let start = Instant::now();
    let (ii, iii) = (TransferCase::of(CaseKind::Ii), TransferCase::of(CaseKind::Iii));
    let mut n = 0;
    for rank in 1..=3 {
        let c_type: CartanType = format!("C{rank}").parse().unwrap();
        let b_type: CartanType = format!("B{rank}").parse().unwrap();
        for l in 1..=6i64 {
            let shorts: Vec<Option<i64>> = if rank == 1 { vec![None] } else { (1..=6).map(Some).collect() };
            for m in shorts {
                let c = Component::new(c_type, Table1Labels::ints(Some(l), m, None)).map_err(|e| e.to_string())?;
                let b = Component::new(b_type, Table1Labels::ints(m, Some(l), Some(0))).map_err(|e| e.to_string())?;
                for (comp, case, other) in [(&c, &ii, &iii), (&b, &iii, &ii)] {
                    ensure(roundtrip_check(comp, case).map_err(|e| e.to_string())?, || format!("{comp}: round trip"))?;
                    let moved = hecke_core::isogeny_transfer::transfer(
                        comp,
                        case,
                        hecke_core::isogeny_transfer::Direction::ToQuotient,
                    )
                    .map_err(|e| e.to_string())?;
                    ensure(roundtrip_check(&moved, other).map_err(|e| e.to_string())?, || format!("{moved}: round trip"))?;
                    let chk = class_preserved(comp, &moved).map_err(|e| e.to_string())?;
                    ensure(chk.status_invariant, || format!("{comp} -> {moved}: match status changes"))?;
                    ensure(chk.before.is_none() || chk.preserved, || format!("{comp} -> {moved}: row not preserved"))?;
                    n += 1;
                }
            }
        }
    }
    within(start.elapsed(), 5)?;
    Ok(format!("{n} components of types B1-B3, C1-C3"))
}

fn character_sums() -> Outcome {
    let mut count = 0;
    for p in [3u64, 5, 7] {
        for k in 1..=2 {
            let n = p.pow(k);
            let chars = FiniteCharacter::all(n).map_err(|e| e.to_string())?;
            let phi = (p - 1) * p.pow(k - 1);
            ensure(chars.len() as u64 == phi, || format!("mod {n}: {} characters", chars.len()))?;
            for chi in &chars {
                let s = char_sum(chi);
                if chi.is_trivial() {
                    ensure(s.to_string() == phi.to_string(), || format!("mod {n}: trivial sum {s}"))?;
                } else {
                    ensure(s.is_zero(), || format!("mod {n}: sum {s} for order {}", chi.order()))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} nontrivial characters"))
}

fn case_database() -> Outcome {
    let mut checked = 0;
    let mut open = 0;
    for rec in &case_db().records {
        let c = case_conformance(rec).map_err(|e| e.to_string())?;
        match c.status {
            CaseStatus::Open => open += 1,
            CaseStatus::Checked => {
                ensure(c.failures.is_empty(), || format!("{} {:?}: {:?}", rec.group, rec.levi, c.failures))?;
                checked += 1;
            }
        }
    }
    let choices = |group: &str| -> Result<BTreeMap<String, Vec<ParamPair>>, String> {
        let rec = case_lookup(group, &[]).map_err(|e| e.to_string())?;
        Ok(rec
            .orbits
            .iter()
            .map(|o| (format!("{:?}", o.rel_length), o.params.choices().unwrap_or_default()))
            .collect())
    };
    let q = |a: i64| ParamPair::ints(a, 0).unwrap();
    let g2 = choices("G2")?;
    ensure(g2.values().all(|c| c == &vec![q(1)]), || format!("G2: {g2:?}"))?;
    let d4 = choices("3D4")?;
    let short = d4.get("Short").cloned().unwrap_or_default();
    ensure(short == vec![q(1), q(3)], || format!("3D4 short: {short:?}"))?;
    ensure(d4.get("Long") == Some(&vec![q(1)]), || format!("3D4 long: {d4:?}"))?;
    Ok(format!("{checked} closed records conform, {open} open; G2 and 3D4 give q_beta in {{q_F, q_F^3}}"))
}

fn weyl_orders() -> Outcome {
    let start = Instant::now();
    for (ty, order) in [("A2", 6), ("B2", 8), ("G2", 12), ("B3", 48), ("C3", 48), ("F4", 1152)] {
        let rs = system(ty);
        let w = WeylGroup::new(&rs).map_err(|e| e.to_string())?;
        ensure(w.order() == order, || format!("|W({ty})| = {}", w.order()))?;
        // every element is distinct and lengths top out at the number of positive roots
        let longest = w.len_of(w.longest());
        ensure(longest == rs.num_positive(), || format!("{ty}: longest element has length {longest}"))?;
    }
    within(start.elapsed(), 10)?;
    Ok("A2 6, B2 8, G2 12, B3 48, C3 48, F4 1152".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("algebra consistency", algebra_consistency),
        ("intertwiner identity", intertwiner_identity),
        ("reducibility points", reducibility),
        ("mu round trip", mu_roundtrip),
        ("table conformance sweep", conformance_sweep),
        ("bound checks", bound_checks),
        ("isogeny round trips", isogeny),
        ("character sums vanish", character_sums),
        ("case database", case_database),
        ("Weyl group orders", weyl_orders),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let r = f();
        let secs = start.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!("PASS  {:>2}  {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}  {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
