//! `hecke`: command line access to hecke-core. Prints JSON (or CSV with
//! `--csv`) and exits 0 on success, 1 when a verification fails and 2 on
//! bad input.

mod input;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hecke_core::hecke_algebra::{check_relations, parse_word, ElementJson};
use hecke_core::intertwiner_rank1::{
    char_sum, composite_scalar, j_matrix, numeric_zeros, rank_one_outcome, reciprocal_profile,
    reducibility_points, verify_composite, Direction as JDirection, FiniteCharacter,
};
use hecke_core::isogeny_transfer::{
    class_preserved, roundtrip_check, transfer, CaseKind, Component, Direction, TransferCase,
};
use hecke_core::label_params::{q_from_labels, q_power};
use hecke_core::mu_function::{mu_factor, poles_zeros, profile_of, q_from_poles, sigma_o_mu, MuFactor};
use hecke_core::param_catalog::{
    case_conformance, case_db, case_lookup, classical_bound_check, classical_labels, match_label_function,
    parity_rule, parse_levi, quasisplit_ps_q, table1, type_a_check, u3_outcomes, unitary_ps_descriptor,
    CaseRecord, CaseTag, ClassicalFamily, GroupFamily, Table1Row, TypeAData, UnitarySignature,
};
use hecke_core::param_catalog::unitary::PsComponent;
use hecke_core::param_catalog::cases::{CaseDb, CaseStatus};
use hecke_core::root_data::{decompose_extended, LatticeAuto};
use hecke_core::serde_rat::rat_to_string;
use hecke_core::Rat;
use serde::Serialize;
use serde_json::{json, Value};

use input::{at, rat, read_json, AlgebraArgs, CliResult, RootArgs, UsageError};

#[derive(Parser, Debug)]
#[command(name = "hecke", version, about = "Exact computations with affine Hecke algebras and their parameters")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args, Debug)]
struct FamilyArgs {
    /// a (type C component), b (type B) or c (type A)
    #[arg(long = "case")]
    case_tag: Option<CaseTag>,
    #[arg(long)]
    f: Option<u32>,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long = "a-plus", allow_negative_numbers = true)]
    a_plus: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    a: Option<i64>,
    #[arg(long = "a-minus", allow_negative_numbers = true)]
    a_minus: Option<i64>,
    #[arg(long = "n-dual")]
    n_dual: Option<u64>,
    #[arg(long = "d-rho")]
    d_rho: Option<u64>,
}

impl FamilyArgs {
    fn family(&self) -> CliResult<ClassicalFamily> {
        let tag = self.case_tag.ok_or_else(|| UsageError("--case: required".into()))?;
        let f = self.f.ok_or_else(|| UsageError("--f: required".into()))?;
        let t = self.t.ok_or_else(|| UsageError("--t: required".into()))?;
        let need = |v: Option<i64>, flag: &str| v.ok_or_else(|| UsageError(format!("{flag}: required for case {tag}")));
        let fam = match tag {
            CaseTag::A => ClassicalFamily::case_a(f, t, need(self.a_plus, "--a-plus")?),
            CaseTag::B => ClassicalFamily::case_b(f, t, need(self.a, "--a")?, need(self.a_minus, "--a-minus")?),
            CaseTag::C => ClassicalFamily::case_c(f, t),
        };
        let fam = match (self.n_dual, self.d_rho) {
            (Some(n), d) => fam.with_dims(n, d.unwrap_or(t.into())),
            (None, Some(d)) => ClassicalFamily { d_rho: d, ..fam },
            (None, None) => fam,
        };
        at("family", fam.check())?;
        Ok(fam)
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MuAction {
    /// The factor as a rational function of X
    Factor,
    /// Its zeros and poles
    Poles,
    /// Parameters read back from the poles
    Recover,
    /// The root system where the factors given by --params are non-constant
    Sigma,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// The unipotent label table
    Table1 {
        #[arg(long)]
        csv: bool,
    },
    /// Match a labelled root system against the label table
    MatchLabels {
        #[command(flatten)]
        root: RootArgs,
        /// File with {"type": "...", "labels": "...", "base_exp": "..."}
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Labels of a classical-group family, optionally as a rank-n component
    Classical {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long)]
        rank: Option<usize>,
    },
    /// The Jordan-block bound for a classical family, or the type A divisibility check
    Bound {
        #[command(flatten)]
        fam: FamilyArgs,
        /// n,m,m',e,s,t for an inner form of GL_n
        #[arg(long = "inner-form", conflicts_with = "case_tag")]
        inner_form: Option<String>,
    },
    /// The parity rule on a and a_- for a group family and torsion number t
    Parity {
        #[arg(long)]
        group: GroupFamily,
        #[arg(long)]
        t: u32,
        #[arg(long, allow_negative_numbers = true)]
        a: Option<i64>,
        #[arg(long = "a-minus", allow_negative_numbers = true)]
        a_minus: Option<i64>,
    },
    /// Factors of the principal-series Hecke algebra of U_N
    UnitaryPs {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ramified: bool,
        /// Such as ns:2,st:1,n0:1; all signatures when omitted
        #[arg(long)]
        signature: Option<String>,
        #[arg(long)]
        csv: bool,
    },
    /// q_alpha for a quasi-split principal series from the orbit sizes
    PsQ {
        /// Orbit size under the Weil group
        #[arg(long)]
        wf: u64,
        /// Orbit size under inertia
        #[arg(long = "if")]
        if_: u64,
        /// Also list the three U_3 outcomes
        #[arg(long)]
        u3: bool,
    },
    /// Look up and check a recorded exceptional case
    Case {
        #[arg(long)]
        group: Option<String>,
        /// Such as {2,3} or "alpha_2 alpha_3"
        #[arg(long)]
        levi: Option<String>,
        /// Check every record
        #[arg(long)]
        all: bool,
        /// Case database to use instead of the built-in one
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Move labels along an isogeny
    Transfer {
        #[command(flatten)]
        root: RootArgs,
        #[arg(long = "case", default_value = "i")]
        case: CaseKind,
        #[arg(long, default_value = "to-quotient")]
        direction: Direction,
    },
    /// Rank-one mu-factors
    Mu {
        action: MuAction,
        /// Exponent of q_alpha
        #[arg(long)]
        qa: Option<String>,
        /// Exponent of q_alpha*
        #[arg(long, default_value = "0")]
        qs: String,
        #[arg(long = "c-prime", default_value = "1")]
        c_prime: String,
        #[command(flatten)]
        root: RootArgs,
        /// For sigma: one qa,qs pair per orbit, separated by ';'
        #[arg(long)]
        params: Option<String>,
    },
    /// The rank-one J-matrices and their product
    Jmatrix {
        /// forward, backward or both
        #[arg(long, default_value = "both")]
        direction: String,
    },
    /// The composite scalar, its poles and the reducibility points
    Scalar {
        /// Also give numerical zeros at this value of q
        #[arg(long)]
        q: Option<f64>,
    },
    /// Character sums over (Z/p^k)^x
    Charsum {
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long)]
        modulus: Option<u64>,
        /// A single character as {"modulus": n, "m": m, "values": {"u": e}}
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Multiply two elements
    Mul {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// Left factor as a word such as "X(1) T0"
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        b: Option<String>,
        /// File with {"a": element, "b": element}
        #[arg(long)]
        elements: Option<PathBuf>,
    },
    /// Expand a word in the generators in the theta_x T_w basis
    NormalForm {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        word: String,
    },
    /// Verify the defining relations and associativity on random samples
    CheckRelations {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Split a lattice automorphism as r w
    Decompose {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// Rows separated by ';', such as 0,1;1,0
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
}

enum Output {
    Json(Value),
    Csv(Vec<Vec<String>>),
}

/// What a command produced and whether its checks passed.
struct Report {
    out: Output,
    ok: bool,
}

impl Report {
    fn json(v: impl Serialize) -> Self {
        Report::checked(v, true)
    }

    fn checked(v: impl Serialize, ok: bool) -> Self {
        Report {
            out: Output::Json(serde_json::to_value(v).expect("output serializes")),
            ok,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(r) => {
            match r.out {
                // a closed pipe downstream is not our failure
                Output::Json(v) => {
                    let _ = writeln!(std::io::stdout().lock(), "{v}");
                }
                Output::Csv(rows) => {
                    let mut w = csv::Writer::from_writer(std::io::stdout().lock());
                    for row in rows {
                        if w.write_record(&row).is_err() {
                            break;
                        }
                    }
                    let _ = w.flush();
                }
            }
            if r.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("hecke: {msg}");
            ExitCode::from(2)
        }
    }
}

fn csv_table<const N: usize>(header: [&str; N], rows: impl IntoIterator<Item = [String; N]>) -> Vec<Vec<String>> {
    std::iter::once(header.iter().map(|s| s.to_string()).collect())
        .chain(rows.into_iter().map(|r| r.to_vec()))
        .collect()
}

fn run(cmd: Cmd) -> CliResult<Report> {
    match cmd {
        Cmd::Table1 { csv } => {
            let rows = table1();
            if csv {
                Ok(Report {
                    out: Output::Csv(csv_table(Table1Row::CSV_HEADER, rows.iter().map(|r| r.csv_record()))),
                    ok: true,
                })
            } else {
                Ok(Report::json(rows))
            }
        }
        Cmd::MatchLabels { root, json } => match_labels(root, json),
        Cmd::Classical { fam, rank } => {
            let fam = fam.family()?;
            let labels = at("family", classical_labels(&fam))?;
            let mut v = json!({ "family": fam, "labels": labels });
            let mut ok = true;
            if let Some(r) = rank {
                let (rs, lf) = at("--rank", fam.component(r))?;
                let comps = at("--rank", match_label_function(&rs, &lf))?;
                ok = comps.iter().all(|c| c.matched.is_some());
                v["component"] = json!({ "type": rs.type_string(), "labels": lf, "matches": comps, "conforms": ok });
            }
            Ok(Report::checked(v, ok))
        }
        Cmd::Bound { fam, inner_form } => {
            if let Some(s) = inner_form {
                let n: Vec<u64> = s
                    .split(',')
                    .map(|x| x.trim().parse::<u64>())
                    .collect::<Result<_, _>>()
                    .map_err(|e| UsageError::at("--inner-form", e))?;
                let [n, m, m_prime, e, s, t] = n[..] else {
                    return Err(UsageError("--inner-form: expected n,m,m',e,s,t".into()));
                };
                let d = TypeAData { n, m, m_prime, e, s, t };
                let r = at("--inner-form", type_a_check(&d))?;
                return Ok(Report::json(json!({ "data": d, "check": r })));
            }
            let fam = fam.family()?;
            let b = at("--n-dual", classical_bound_check(&fam))?;
            let ok = b.pass;
            Ok(Report::checked(json!({ "family": fam, "bound": b }), ok))
        }
        Cmd::Parity { group, t, a, a_minus } => {
            let rule = at("--t", parity_rule(group, t))?;
            let mut v = json!({ "group": group, "t": t, "rule": rule });
            let mut ok = true;
            match (a, a_minus) {
                (Some(a), Some(am)) => {
                    ok = rule.admits(a, am);
                    v["a"] = json!(a);
                    v["a_minus"] = json!(am);
                    v["admitted"] = json!(ok);
                }
                (None, None) => {}
                _ => return Err(UsageError("--a and --a-minus go together".into())),
            }
            Ok(Report::checked(v, ok))
        }
        Cmd::UnitaryPs { n, ramified, signature, csv } => unitary(n, ramified, signature, csv),
        Cmd::PsQ { wf, if_, u3 } => {
            let q = at("--if", quasisplit_ps_q(wf, if_))?;
            let mut v = json!({ "q_alpha": q_power(&q), "q_alpha_star": "1", "exponent": rat_to_string(&q) });
            if u3 {
                v["u3_outcomes"] = json!(u3_outcomes());
            }
            Ok(Report::json(v))
        }
        Cmd::Case { group, levi, all, json } => case(group, levi, all, json),
        Cmd::Transfer { root, case, direction } => {
            let rs = root.root_system()?;
            let lf = root.label_function(&rs)?;
            let before = at("--labels", Component::from_label_function(&rs, &lf))?;
            let tc = TransferCase::of(case);
            let after = at("--case", transfer(&before, &tc, direction))?;
            let class = at("--labels", class_preserved(&before, &after))?;
            let round = at("--case", transfer(&after, &tc, direction.reverse()))? == before
                && (direction == Direction::ToCover || at("--case", roundtrip_check(&before, &tc))?);
            let ok = round && class.status_invariant;
            Ok(Report::checked(
                json!({ "case": tc, "direction": direction, "before": before, "after": after,
                        "class": class, "roundtrip": round }),
                ok,
            ))
        }
        Cmd::Mu { action, qa, qs, c_prime, root, params } => mu(action, qa, &qs, &c_prime, root, params),
        Cmd::Jmatrix { direction } => {
            let dirs: Vec<JDirection> = match direction.as_str() {
                "both" => vec![JDirection::POp, JDirection::P],
                d => vec![d.parse().map_err(|e| UsageError::at("--direction", e))?],
            };
            let mats: Vec<Value> = dirs
                .iter()
                .map(|&d| {
                    let m = j_matrix(d);
                    json!({ "direction": d, "entries": m.to_strings(), "poles_only_at_one": m.poles_only_at_one() })
                })
                .collect();
            let ok = verify_composite();
            Ok(Report::checked(
                json!({ "matrices": mats, "composite_scalar": composite_scalar().to_string(), "composite_is_scalar": ok }),
                ok,
            ))
        }
        Cmd::Scalar { q } => {
            let s = composite_scalar();
            let prof = at("scalar", profile_of(&s))?;
            let z1 = prof.poles.iter().any(|p| p.sign == 1 && p.exp == Rat::from_integer(0));
            let mut v = json!({
                "composite_scalar": s.to_string(),
                "profile": prof,
                "pole_at_z_1": z1,
                "reciprocal_profile": reciprocal_profile(),
                "reducibility_points": at("scalar", reducibility_points())?,
            });
            if let Some(q) = q {
                v["numeric_zeros"] = json!(numeric_zeros(q));
            }
            Ok(Report::json(v))
        }
        Cmd::Charsum { p, k, modulus, json } => charsum(p, k, modulus, json),
        Cmd::Mul { alg, a, b, elements } => {
            let h = alg.algebra()?;
            let (x, y) = match (elements, a, b) {
                (Some(path), None, None) => {
                    #[derive(serde::Deserialize)]
                    #[serde(deny_unknown_fields)]
                    struct Pair {
                        a: ElementJson,
                        b: ElementJson,
                    }
                    let p: Pair = read_json(&path)?;
                    (at("a", h.from_json(&p.a))?, at("b", h.from_json(&p.b))?)
                }
                (None, Some(a), Some(b)) => {
                    let wa = at("--a", parse_word(&a))?;
                    let wb = at("--b", parse_word(&b))?;
                    (at("--a", h.normal_form(&wa))?, at("--b", h.normal_form(&wb))?)
                }
                _ => return Err(UsageError("give either --elements or both --a and --b".into())),
            };
            let p = at("product", h.multiply(&x, &y))?;
            Ok(Report::json(h.to_json(&p)))
        }
        Cmd::NormalForm { alg, word } => {
            let h = alg.algebra()?;
            let w = at("--word", parse_word(&word))?;
            let e = at("--word", h.normal_form(&w))?;
            Ok(Report::json(h.to_json(&e)))
        }
        Cmd::CheckRelations { alg, samples, seed } => {
            let h = alg.algebra()?;
            let r = at("check", check_relations(&h, samples, seed))?;
            let ok = r.passed;
            Ok(Report::checked(r, ok))
        }
        Cmd::Decompose { alg, matrix } => {
            let (d, _) = alg.datum()?;
            let g = at("--matrix", LatticeAuto::parse(&matrix))?;
            let dec = at("--matrix", decompose_extended(&d, &g))?;
            Ok(Report::json(json!({ "datum": d.to_json(), "decomposition": dec })))
        }
    }
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct LabelsFile {
    #[serde(rename = "type")]
    ty: String,
    labels: String,
    #[serde(default)]
    base_exp: Option<String>,
}

fn match_labels(root: RootArgs, json: Option<PathBuf>) -> CliResult<Report> {
    let root = match json {
        Some(path) => {
            let f: LabelsFile = read_json(&path)?;
            RootArgs { ty: Some(f.ty), rank: None, labels: Some(f.labels), base_exp: f.base_exp }
        }
        None => root,
    };
    let rs = root.root_system()?;
    let lf = root.label_function(&rs)?;
    let comps = at("--labels", match_label_function(&rs, &lf))?;
    let q: Vec<Value> = (0..lf.orbits.len())
        .map(|o| {
            let p = at("--labels", q_from_labels(&lf, o))?;
            Ok(json!({ "orbit": o, "q_alpha": q_power(&p.q_alpha), "q_star": q_power(&p.q_alpha_star) }))
        })
        .collect::<CliResult<_>>()?;
    let ok = comps.iter().all(|c| c.matched.is_some());
    Ok(Report::checked(
        json!({ "type": rs.type_string(), "labels": lf, "q_params": q, "components": comps, "conforms": ok }),
        ok,
    ))
}

fn unitary(n: usize, ramified: bool, signature: Option<String>, csv: bool) -> CliResult<Report> {
    let sigs = match signature {
        Some(s) => vec![s.parse::<UnitarySignature>().map_err(|e| UsageError::at("--signature", e))?],
        None => UnitarySignature::all(n, ramified),
    };
    let mut all: Vec<(UnitarySignature, Vec<PsComponent>)> = Vec::new();
    for s in sigs {
        let comps = at("--signature", unitary_ps_descriptor(n, ramified, &s))?;
        all.push((s, comps));
    }
    let conforms = |c: &PsComponent| -> CliResult<bool> {
        match &c.labels {
            Some(lf) => Ok(at("labels", match_label_function(&c.system, lf))?.iter().all(|m| m.matched.is_some())),
            None => Ok(true),
        }
    };
    let mut ok = true;
    for (_, comps) in &all {
        for c in comps {
            ok &= conforms(c)?;
        }
    }
    if csv {
        let mut header = vec!["signature".to_string()];
        header.extend(PsComponent::CSV_HEADER.iter().map(|s| s.to_string()));
        let mut rows = vec![header];
        for (s, comps) in &all {
            for c in comps {
                let mut r = vec![s.to_string()];
                r.extend(c.csv_record());
                rows.push(r);
            }
        }
        return Ok(Report { out: Output::Csv(rows), ok });
    }
    let sigs: Vec<Value> = all
        .iter()
        .map(|(s, comps)| json!({ "signature": s.to_string(), "components": comps }))
        .collect();
    Ok(Report::checked(json!({ "n": n, "ramified": ramified, "signatures": sigs, "conforms": ok }), ok))
}

fn case(group: Option<String>, levi: Option<String>, all: bool, json: Option<PathBuf>) -> CliResult<Report> {
    let loaded: Option<CaseDb> = json.as_deref().map(read_json).transpose()?;
    let records: Vec<CaseRecord> = match (&loaded, all, group, levi) {
        (Some(db), true, None, None) => db.records.clone(),
        (None, true, None, None) => case_db().records.clone(),
        (_, false, Some(g), Some(l)) => {
            let key = at("--levi", parse_levi(&l))?;
            match &loaded {
                None => vec![at("--group", case_lookup(&g, &key))?.clone()],
                Some(db) => {
                    let norm = hecke_core::param_catalog::cases::normalize_group(&g);
                    let mut k = key.clone();
                    k.sort_unstable();
                    let found = db.records.iter().find(|r| {
                        hecke_core::param_catalog::cases::normalize_group(&r.group) == norm
                            && std::iter::once(&r.levi).chain(&r.associates).any(|s| {
                                let mut s = s.clone();
                                s.sort_unstable();
                                s == k
                            })
                    });
                    vec![found
                        .ok_or_else(|| UsageError(format!("--group: no case for {g} with Levi subset {key:?}")))?
                        .clone()]
                }
            }
        }
        _ => return Err(UsageError("give --group and --levi, or --all".into())),
    };
    let mut ok = true;
    let mut out = Vec::new();
    for (i, r) in records.iter().enumerate() {
        let c = at(&format!("records[{i}]"), case_conformance(r))?;
        ok &= c.failures.is_empty();
        let open = c.status == CaseStatus::Open;
        out.push(json!({ "record": r, "conformance": c, "open": open }));
    }
    Ok(Report::checked(json!({ "cases": out, "passed": ok }), ok))
}

fn mu(action: MuAction, qa: Option<String>, qs: &str, c_prime: &str, root: RootArgs, params: Option<String>) -> CliResult<Report> {
    if let MuAction::Sigma = action {
        let rs = root.root_system()?;
        let params = params.ok_or_else(|| UsageError("--params: required for sigma".into()))?;
        let orbits = rs.orbits();
        let pairs: Vec<&str> = params.split(';').collect();
        if pairs.len() != orbits.len() {
            return Err(UsageError(format!("--params: {rs} has {} orbits, got {}", orbits.len(), pairs.len())));
        }
        let mut factors = BTreeMap::new();
        for (i, p) in pairs.iter().enumerate() {
            let field = format!("--params[{i}]");
            let (a, s) = p.split_once(',').unwrap_or((p, "0"));
            let f = at(&field, mu_factor(rat(&field, a)?, rat(&field, s)?, Rat::from_integer(1)))?;
            factors.insert(i, f);
        }
        let sig = at("--params", sigma_o_mu(&rs, &factors))?;
        let comps = if sig.system.is_empty() {
            Vec::new()
        } else {
            at("--params", match_label_function(&sig.system, &sig.labels))?
        };
        let conforms = comps.iter().all(|c| c.matched.is_some());
        return Ok(Report::json(json!({
            "ambient": rs.type_string(),
            "system": sig.system.type_string(),
            "simple": sig.simple,
            "labels": sig.labels,
            "report": sig.report,
            "components": comps,
            "conforms": conforms,
        })));
    }
    let qa = qa.ok_or_else(|| UsageError("--qa: required".into()))?;
    let f: MuFactor = at("--qa", mu_factor(rat("--qa", &qa)?, rat("--qs", qs)?, rat("--c-prime", c_prime)?))?;
    match action {
        MuAction::Factor => Ok(Report::json(json!({
            "factor": f,
            "function": f.function().to_string(),
            "constant": f.is_constant(),
        }))),
        MuAction::Poles => Ok(Report::json(poles_zeros(&f))),
        MuAction::Recover => {
            let p = at("--qa", q_from_poles(&poles_zeros(&f)))?;
            let ok = p == f.pair();
            Ok(Report::checked(
                json!({ "q_alpha": q_power(&p.q_alpha), "q_star": q_power(&p.q_alpha_star) }),
                ok,
            ))
        }
        MuAction::Sigma => unreachable!("handled above"),
    }
}

fn charsum(p: Option<u64>, k: u32, modulus: Option<u64>, json: Option<PathBuf>) -> CliResult<Report> {
    #[derive(serde::Deserialize)]
    #[serde(deny_unknown_fields)]
    struct CharFile {
        modulus: u64,
        m: u64,
        values: BTreeMap<u64, u64>,
    }
    let describe = |i: usize, chi: &FiniteCharacter| -> CliResult<Value> {
        let s = char_sum(chi);
        let outcome = at("character", rank_one_outcome(chi))?;
        Ok(json!({
            "index": i,
            "order": chi.order(),
            "trivial": chi.is_trivial(),
            "sum": s,
            "vanishes": s.is_zero(),
            "outcome": outcome,
        }))
    };
    let (n, chars) = match (json, p, modulus) {
        (Some(path), None, None) => {
            let f: CharFile = read_json(&path)?;
            let chi = at("values", FiniteCharacter::from_table(f.modulus, f.m, f.values))?;
            (f.modulus, vec![chi])
        }
        (None, Some(p), None) => {
            let n = p
                .checked_pow(k)
                .ok_or_else(|| UsageError("--k: p^k overflows".into()))?;
            (n, at("--p", FiniteCharacter::all(n))?)
        }
        (None, None, Some(n)) => (n, at("--modulus", FiniteCharacter::all(n))?),
        _ => return Err(UsageError("give exactly one of --p, --modulus or --json".into())),
    };
    let rows: Vec<Value> = chars.iter().enumerate().map(|(i, c)| describe(i, c)).collect::<CliResult<_>>()?;
    let ok = chars.iter().all(|c| c.is_trivial() || char_sum(c).is_zero());
    Ok(Report::checked(json!({ "modulus": n, "characters": rows, "passed": ok }), ok))
}
