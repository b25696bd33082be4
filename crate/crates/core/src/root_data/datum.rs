//! Based root data `(X, R, X^vee, R^vee, basis)` and the splitting of
//! basis-compatible automorphisms as `r w`.

use serde::{Deserialize, Serialize};

use super::{parse_components, RootSystem, WeylGroup, MAX_WEYL_RANK};
use crate::error::{Error, Result};

/// Roots live in `X = Z^n`, coroots in `X^vee = Z^n`, paired by the dot
/// product. Root `k` corresponds to root `k` of the abstract system.
#[derive(Clone, Debug)]
pub struct BasedRootDatum {
    rs: RootSystem,
    lattice_rank: usize,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    basis: Vec<usize>,
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Serialized form: simple roots and coroots in lattice coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumJson {
    pub components: String,
    pub lattice_rank: usize,
    pub simple_roots: Vec<Vec<i64>>,
    pub simple_coroots: Vec<Vec<i64>>,
}

impl BasedRootDatum {
    /// Builds the datum from simple roots in `X` and simple coroots in
    /// `X^vee`; their pairings must reproduce the Cartan matrix.
    pub fn from_simple(
        rs: RootSystem,
        lattice_rank: usize,
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let n = rs.rank();
        if simple_roots.len() != n || simple_coroots.len() != n {
            return Err(Error::InvalidDatum(format!(
                "expected {n} simple roots and coroots"
            )));
        }
        if simple_roots
            .iter()
            .chain(&simple_coroots)
            .any(|v| v.len() != lattice_rank)
        {
            return Err(Error::InvalidDatum(format!(
                "vectors must have length {lattice_rank}"
            )));
        }
        for i in 0..n {
            for j in 0..n {
                let p = dot(&simple_roots[j], &simple_coroots[i]);
                if p != rs.cartan_matrix()[i][j] {
                    return Err(Error::InvalidDatum(format!(
                        "<alpha_{j}, alpha_{i}^vee> = {p}, Cartan matrix says {}",
                        rs.cartan_matrix()[i][j]
                    )));
                }
            }
        }
        let mut roots = Vec::with_capacity(rs.num_roots());
        let mut coroots = Vec::with_capacity(rs.num_roots());
        for beta in rs.roots() {
            let mut r = vec![0i64; lattice_rank];
            let mut c = vec![0i64; lattice_rank];
            let nb = rs.norm(beta);
            for (j, &cj) in beta.iter().enumerate() {
                if cj == 0 {
                    continue;
                }
                let mut e = vec![0; n];
                e[j] = 1;
                let nj = rs.norm(&e);
                if (cj * nj) % nb != 0 {
                    return Err(Error::InvalidDatum("non-integral coroot".into()));
                }
                let cc = cj * nj / nb;
                for k in 0..lattice_rank {
                    r[k] += cj * simple_roots[j][k];
                    c[k] += cc * simple_coroots[j][k];
                }
            }
            roots.push(r);
            coroots.push(c);
        }
        let basis = (0..n).map(|i| rs.simple_index(i)).collect();
        let d = BasedRootDatum {
            rs,
            lattice_rank,
            roots,
            coroots,
            basis,
        };
        d.check()?;
        Ok(d)
    }

    /// `X` = root lattice, basis of simple roots.
    pub fn adjoint(rs: RootSystem) -> Self {
        let n = rs.rank();
        let sr = (0..n)
            .map(|j| (0..n).map(|k| (k == j) as i64).collect())
            .collect();
        let sc = rs.cartan_matrix().to_vec();
        Self::from_simple(rs, n, sr, sc).expect("adjoint datum is valid")
    }

    /// `X` = weight lattice, basis of fundamental weights.
    pub fn simply_connected(rs: RootSystem) -> Self {
        let n = rs.rank();
        let a = rs.cartan_matrix().to_vec();
        let sr = (0..n).map(|j| (0..n).map(|i| a[i][j]).collect()).collect();
        let sc = (0..n)
            .map(|i| (0..n).map(|k| (k == i) as i64).collect())
            .collect();
        Self::from_simple(rs, n, sr, sc).expect("simply connected datum is valid")
    }

    /// `GL_n`: type `A_{n-1}` on `Z^n`.
    pub fn gl(n: usize) -> Result<Self> {
        let rs = if n >= 2 {
            RootSystem::new(&[super::CartanType::new(super::Family::A, n - 1)?])?
        } else {
            RootSystem::empty()
        };
        let simple: Vec<Vec<i64>> = (0..n.saturating_sub(1))
            .map(|j| {
                let mut e = vec![0; n];
                e[j] = 1;
                e[j + 1] = -1;
                e
            })
            .collect();
        Self::from_simple(rs, n, simple.clone(), simple)
    }

    /// No roots, lattice `Z^m`.
    pub fn torus(m: usize) -> Self {
        Self::from_simple(RootSystem::empty(), m, vec![], vec![]).expect("torus")
    }

    pub fn from_json(j: &DatumJson) -> Result<Self> {
        let rs = RootSystem::new(&parse_components(&j.components)?)?;
        Self::from_simple(rs, j.lattice_rank, j.simple_roots.clone(), j.simple_coroots.clone())
    }

    pub fn to_json(&self) -> DatumJson {
        DatumJson {
            components: self.rs.type_string(),
            lattice_rank: self.lattice_rank,
            simple_roots: self.basis.iter().map(|&k| self.roots[k].clone()).collect(),
            simple_coroots: self.basis.iter().map(|&k| self.coroots[k].clone()).collect(),
        }
    }

    fn check(&self) -> Result<()> {
        for k in 0..self.roots.len() {
            let p = dot(&self.roots[k], &self.coroots[k]);
            if p != 2 {
                return Err(Error::InvalidDatum(format!("<root {k}, coroot {k}> = {p}")));
            }
        }
        for i in 0..self.rs.rank() {
            let perm = self.rs.reflection_perm(i);
            for k in 0..self.roots.len() {
                if self.reflect(i, &self.roots[k]) != self.roots[perm[k]] {
                    return Err(Error::InvalidDatum("roots not reflection-stable".into()));
                }
                if self.coreflect(i, &self.coroots[k]) != self.coroots[perm[k]] {
                    return Err(Error::InvalidDatum("coroots not reflection-stable".into()));
                }
            }
        }
        Ok(())
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn lattice_rank(&self) -> usize {
        self.lattice_rank
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    /// Indices of the basis among the roots.
    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    pub fn simple_root(&self, i: usize) -> &[i64] {
        &self.roots[self.basis[i]]
    }

    pub fn simple_coroot(&self, i: usize) -> &[i64] {
        &self.coroots[self.basis[i]]
    }

    /// `s_i(x) = x - <x, alpha_i^vee> alpha_i` on `X`.
    pub fn reflect(&self, i: usize, x: &[i64]) -> Vec<i64> {
        let k = dot(x, self.simple_coroot(i));
        let a = self.simple_root(i);
        x.iter().zip(a).map(|(xi, ai)| xi - k * ai).collect()
    }

    /// Contragredient reflection on `X^vee`.
    pub fn coreflect(&self, i: usize, y: &[i64]) -> Vec<i64> {
        let k = dot(self.simple_root(i), y);
        let c = self.simple_coroot(i);
        y.iter().zip(c).map(|(yi, ci)| yi - k * ci).collect()
    }

    /// Action of the word `s_{i1} ... s_{ik}` on `x`.
    pub fn act_word(&self, word: &[usize], x: &[i64]) -> Vec<i64> {
        word.iter().rev().fold(x.to_vec(), |y, &s| self.reflect(s, &y))
    }

    /// Matrix of the simple reflection on column vectors of `X`.
    pub fn reflection_matrix(&self, i: usize) -> Vec<Vec<i64>> {
        let n = self.lattice_rank;
        let a = self.simple_root(i);
        let c = self.simple_coroot(i);
        (0..n)
            .map(|r| (0..n).map(|s| (r == s) as i64 - a[r] * c[s]).collect())
            .collect()
    }
}

/// An integer matrix acting on column vectors of `X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeAuto {
    pub matrix: Vec<Vec<i64>>,
}

impl LatticeAuto {
    pub fn identity(n: usize) -> Self {
        LatticeAuto {
            matrix: (0..n).map(|r| (0..n).map(|s| (r == s) as i64).collect()).collect(),
        }
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        self.matrix.iter().map(|row| dot(row, x)).collect()
    }

    pub fn compose(&self, o: &LatticeAuto) -> LatticeAuto {
        let n = self.matrix.len();
        LatticeAuto {
            matrix: (0..n)
                .map(|r| (0..n).map(|s| (0..n).map(|k| self.matrix[r][k] * o.matrix[k][s]).sum()).collect())
                .collect(),
        }
    }

    /// Parses `"0,1;1,0"` (rows separated by `;`).
    pub fn parse(s: &str) -> Result<Self> {
        let matrix: Vec<Vec<i64>> = s
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|e| e.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad matrix entry `{e}`"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return Err(Error::Parse("matrix must be square".into()));
        }
        Ok(LatticeAuto { matrix })
    }
}

fn det(m: &[Vec<i64>]) -> i64 {
    // Bareiss fraction-free elimination
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// `g = r w` with `r` preserving the positive roots and `w` in W.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub r: LatticeAuto,
    /// Permutation of root indices induced by `r`.
    pub r_perm: Vec<usize>,
    /// Reduced word of `w` (canonical when the Weyl group is enumerable).
    pub w: Vec<usize>,
}

/// Root permutation induced by a lattice map, if it permutes the roots.
pub fn root_permutation(d: &BasedRootDatum, g: &LatticeAuto) -> Result<Vec<usize>> {
    let index: std::collections::HashMap<&[i64], usize> =
        d.roots.iter().enumerate().map(|(i, r)| (r.as_slice(), i)).collect();
    d.roots
        .iter()
        .enumerate()
        .map(|(k, r)| {
            index
                .get(g.apply(r).as_slice())
                .copied()
                .ok_or_else(|| Error::NotAutomorphism(format!("image of root {k} is not a root")))
        })
        .collect()
}

pub fn decompose_extended(d: &BasedRootDatum, g: &LatticeAuto) -> Result<Decomposition> {
    let n = d.lattice_rank;
    if g.matrix.len() != n || g.matrix.iter().any(|r| r.len() != n) {
        return Err(Error::NotAutomorphism(format!("expected a {n}x{n} matrix")));
    }
    if det(&g.matrix).abs() != 1 {
        return Err(Error::NotAutomorphism("matrix is not invertible over Z".into()));
    }
    root_permutation(d, g)?;
    let rs = &d.rs;
    let mut h = g.clone();
    let mut used = Vec::new();
    loop {
        let perm = root_permutation(d, &h)?;
        let bad = (0..rs.rank()).find(|&i| !rs.is_positive(perm[rs.simple_index(i)]));
        match bad {
            Some(i) => {
                h = h.compose(&LatticeAuto {
                    matrix: d.reflection_matrix(i),
                });
                used.push(i);
            }
            None => break,
        }
    }
    used.reverse();
    let w = if rs.rank() <= MAX_WEYL_RANK {
        let wg = WeylGroup::new(rs)?;
        wg.word(wg.from_word(&used)?).to_vec()
    } else {
        used
    };
    let r_perm = root_permutation(d, &h)?;
    Ok(Decomposition { r: h, r_perm, w })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::{build_root_system, Family};

    fn a2() -> BasedRootDatum {
        BasedRootDatum::adjoint(build_root_system(Family::A, 2).unwrap())
    }

    fn flip() -> LatticeAuto {
        LatticeAuto::parse("0,1;1,0").unwrap()
    }

    fn word_matrix(d: &BasedRootDatum, w: &[usize]) -> LatticeAuto {
        w.iter().fold(LatticeAuto::identity(d.lattice_rank()), |m, &i| {
            m.compose(&LatticeAuto {
                matrix: d.reflection_matrix(i),
            })
        })
    }

    /// Oracle: search W for the unique w with g w^-1 positive.
    fn brute(d: &BasedRootDatum, g: &LatticeAuto) -> (LatticeAuto, Vec<usize>) {
        let wg = WeylGroup::new(d.root_system()).unwrap();
        let mut found = Vec::new();
        for e in wg.elements() {
            let winv: Vec<usize> = e.word.iter().rev().copied().collect();
            let r = g.compose(&word_matrix(d, &winv));
            let p = root_permutation(d, &r).unwrap();
            if (0..d.root_system().num_positive()).all(|k| d.root_system().is_positive(p[k])) {
                found.push((r, e.word.clone()));
            }
        }
        assert_eq!(found.len(), 1, "factorization must be unique");
        found.pop().unwrap()
    }

    #[test]
    fn weyl_element_gives_identity_part() {
        let d = a2();
        let g = word_matrix(&d, &[0, 1]);
        let dec = decompose_extended(&d, &g).unwrap();
        assert_eq!(dec.r, LatticeAuto::identity(2));
        assert_eq!(dec.w, vec![0, 1]);
    }

    #[test]
    fn flip_and_flip_times_reflection() {
        let d = a2();
        let dec = decompose_extended(&d, &flip()).unwrap();
        assert_eq!(dec.r, flip());
        assert!(dec.w.is_empty());
        let g = flip().compose(&word_matrix(&d, &[0]));
        let dec = decompose_extended(&d, &g).unwrap();
        assert_eq!(dec.r, flip());
        assert_eq!(dec.w, vec![0]);
        assert_eq!((dec.r.clone(), dec.w.clone()), brute(&d, &g));
    }

    #[test]
    fn recomposes_for_all_flip_cosets() {
        let d = a2();
        let wg = WeylGroup::new(d.root_system()).unwrap();
        for e in wg.elements() {
            for base in [LatticeAuto::identity(2), flip()] {
                let g = base.compose(&word_matrix(&d, &e.word));
                let dec = decompose_extended(&d, &g).unwrap();
                assert_eq!(dec.r.compose(&word_matrix(&d, &dec.w)), g);
                let p = &dec.r_perm;
                assert_eq!(crate::root_data::length(p, d.root_system()), 0);
                assert_eq!((dec.r.clone(), dec.w.clone()), brute(&d, &g));
            }
        }
    }

    #[test]
    fn rejects_non_automorphism() {
        let d = a2();
        let g = LatticeAuto::parse("2,0;0,1").unwrap();
        assert!(decompose_extended(&d, &g).is_err());
        let g = LatticeAuto::parse("1,1;0,1").unwrap();
        assert!(matches!(decompose_extended(&d, &g), Err(Error::NotAutomorphism(_))));
    }

    #[test]
    fn standard_data_are_valid() {
        for s in ["B2", "C3", "G2", "F4", "D4", "E6"] {
            let rs = RootSystem::new(&[s.parse().unwrap()]).unwrap();
            BasedRootDatum::adjoint(rs.clone());
            BasedRootDatum::simply_connected(rs);
        }
        let gl3 = BasedRootDatum::gl(3).unwrap();
        assert_eq!(gl3.roots().len(), 6);
        let j = gl3.to_json();
        let back = BasedRootDatum::from_json(&j).unwrap();
        assert_eq!(back.roots(), gl3.roots());
    }

    #[test]
    fn bad_pairing_rejected() {
        let rs = build_root_system(Family::A, 1).unwrap();
        assert!(BasedRootDatum::from_simple(rs, 1, vec![vec![1]], vec![vec![1]]).is_err());
    }
}
