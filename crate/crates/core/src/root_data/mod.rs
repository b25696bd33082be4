//! Root systems, Weyl groups and based root data.
//!
//! Roots are stored as integer vectors in simple-root coordinates, built by
//! closing the simple roots under simple reflections read off the Cartan
//! matrix. Reducible systems are block-diagonal unions of components.

mod cartan;
mod classify;
pub mod datum;
mod weyl;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cartan::{CartanType, Family, RootLength, MAX_RANK};
pub use classify::classify_cartan;
pub use datum::{decompose_extended, BasedRootDatum, DatumJson, Decomposition, LatticeAuto};
pub use weyl::{length, weyl_group, WeylElement, WeylGroup, MAX_WEYL_RANK};

/// A finite reduced root system with a fixed basis.
#[derive(Clone, Debug)]
pub struct RootSystem {
    components: Vec<CartanType>,
    offsets: Vec<usize>,
    cartan: Vec<Vec<i64>>,
    sym: Vec<i64>,
    roots: Vec<Vec<i64>>,
    npos: usize,
    index: HashMap<Vec<i64>, usize>,
    reflections: Vec<Vec<usize>>,
    comp_of_simple: Vec<usize>,
}

/// A W-orbit of roots: all roots of one length in one component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootOrbit {
    pub component: usize,
    pub length: RootLength,
    /// Simple roots (indices) in the orbit.
    pub simple: Vec<usize>,
}

/// `(A, n)` as an irreducible root system.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    RootSystem::new(&[CartanType::new(family, rank)?])
}

impl RootSystem {
    pub fn new(components: &[CartanType]) -> Result<Self> {
        let rank: usize = components.iter().map(|c| c.rank).sum();
        if rank > MAX_RANK {
            return Err(Error::RankTooLarge {
                rank,
                limit: MAX_RANK,
                what: "root system construction",
            });
        }
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut sym = Vec::with_capacity(rank);
        let mut offsets = Vec::new();
        let mut comp_of_simple = Vec::new();
        let mut off = 0;
        for (ci, c) in components.iter().enumerate() {
            let a = c.cartan_matrix();
            for i in 0..c.rank {
                for j in 0..c.rank {
                    cartan[off + i][off + j] = a[i][j];
                }
            }
            sym.extend(c.symmetrizer());
            offsets.push(off);
            comp_of_simple.extend(std::iter::repeat_n(ci, c.rank));
            off += c.rank;
        }
        let mut rs = RootSystem {
            components: components.to_vec(),
            offsets,
            cartan,
            sym,
            roots: Vec::new(),
            npos: 0,
            index: HashMap::new(),
            reflections: Vec::new(),
            comp_of_simple,
        };
        rs.close();
        for (ci, c) in components.iter().enumerate() {
            let got = rs.roots.iter().filter(|r| rs.component_of_coords(r) == Some(ci)).count();
            if got != c.root_count() {
                return Err(Error::InvalidDatum(format!(
                    "{c}: closure produced {got} roots, expected {}",
                    c.root_count()
                )));
            }
        }
        Ok(rs)
    }

    /// The empty root system of rank 0.
    pub fn empty() -> Self {
        Self::new(&[]).expect("empty system")
    }

    fn close(&mut self) {
        let n = self.rank();
        let mut pos: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect();
        let mut seen: std::collections::HashSet<Vec<i64>> = pos.iter().cloned().collect();
        let mut k = 0;
        while k < pos.len() {
            for i in 0..n {
                let r = self.reflect_coords(i, &pos[k]);
                if r.iter().all(|&c| c >= 0) && !seen.contains(&r) {
                    seen.insert(r.clone());
                    pos.push(r);
                }
            }
            k += 1;
        }
        pos.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        self.npos = pos.len();
        let neg: Vec<Vec<i64>> = pos.iter().map(|r| r.iter().map(|c| -c).collect()).collect();
        self.roots = pos;
        self.roots.extend(neg);
        self.index = self
            .roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        self.reflections = (0..n)
            .map(|i| {
                self.roots
                    .iter()
                    .map(|r| self.index[&self.reflect_coords(i, r)])
                    .collect()
            })
            .collect();
    }

    /// `<alpha_i^vee, beta>` for a vector in simple-root coordinates.
    pub fn pairing(&self, i: usize, beta: &[i64]) -> i64 {
        self.cartan[i].iter().zip(beta).map(|(a, b)| a * b).sum()
    }

    pub fn reflect_coords(&self, i: usize, beta: &[i64]) -> Vec<i64> {
        let k = self.pairing(i, beta);
        let mut r = beta.to_vec();
        r[i] -= k;
        r
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn components(&self) -> &[CartanType] {
        &self.components
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots[..self.npos]
    }

    pub fn is_positive(&self, idx: usize) -> bool {
        idx < self.npos
    }

    /// Index of the simple root `i` in [`RootSystem::roots`].
    pub fn simple_index(&self, i: usize) -> usize {
        let mut e = vec![0; self.rank()];
        e[i] = 1;
        self.index[&e]
    }

    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn negative_of(&self, idx: usize) -> usize {
        if idx < self.npos {
            idx + self.npos
        } else {
            idx - self.npos
        }
    }

    /// Permutation of root indices induced by the simple reflection `i`.
    pub fn reflection_perm(&self, i: usize) -> &[usize] {
        &self.reflections[i]
    }

    /// Symmetric form scaled so that it is integral: `(a, b) = sum a_i b_j d_i A_ij`.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a[i] * b[j] * self.sym[i] * self.cartan[i][j];
            }
        }
        s
    }

    pub fn norm(&self, a: &[i64]) -> i64 {
        self.inner(a, a)
    }

    fn component_of_coords(&self, r: &[i64]) -> Option<usize> {
        let i = r.iter().position(|&c| c != 0)?;
        Some(self.comp_of_simple[i])
    }

    pub fn component_of(&self, idx: usize) -> usize {
        self.component_of_coords(&self.roots[idx]).unwrap()
    }

    pub fn component_of_simple(&self, i: usize) -> usize {
        self.comp_of_simple[i]
    }

    /// Simple-root index range of a component.
    pub fn component_range(&self, c: usize) -> std::ops::Range<usize> {
        self.offsets[c]..self.offsets[c] + self.components[c].rank
    }

    pub fn root_length(&self, idx: usize) -> RootLength {
        let c = self.component_of(idx);
        let t = &self.components[c];
        // norms are 2 * d for simple roots, and W-invariant
        let n = self.norm(&self.roots[idx]) / 2;
        t.length_of_norm(n)
    }

    pub fn simple_length(&self, i: usize) -> RootLength {
        self.root_length(self.simple_index(i))
    }

    /// Orbits of W on roots, ordered by component and then long before short.
    pub fn orbits(&self) -> Vec<RootOrbit> {
        let mut out = Vec::new();
        for c in 0..self.components.len() {
            for len in [RootLength::Long, RootLength::Short] {
                let simple: Vec<usize> = self
                    .component_range(c)
                    .filter(|&i| self.simple_length(i) == len)
                    .collect();
                if !simple.is_empty() {
                    out.push(RootOrbit {
                        component: c,
                        length: len,
                        simple,
                    });
                }
            }
        }
        out
    }

    /// Index into [`RootSystem::orbits`] of the orbit containing a root.
    pub fn orbit_of(&self, idx: usize) -> usize {
        let c = self.component_of(idx);
        let len = self.root_length(idx);
        self.orbits()
            .iter()
            .position(|o| o.component == c && o.length == len)
            .unwrap()
    }

    /// Order of `s_i s_j`.
    pub fn coxeter_m(&self, i: usize, j: usize) -> usize {
        if i == j {
            return 1;
        }
        match self.cartan[i][j] * self.cartan[j][i] {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            _ => unreachable!("finite type"),
        }
    }

    /// `A2`, `A1xB2`, or `empty`.
    pub fn type_string(&self) -> String {
        if self.components.is_empty() {
            return "empty".into();
        }
        self.components
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn to_json(&self) -> RootSystemJson {
        let (ty, rank) = match self.components.as_slice() {
            [c] => (c.family.letter().to_string(), c.rank),
            _ => (self.type_string(), self.rank()),
        };
        RootSystemJson {
            ty,
            rank,
            roots: self.roots.clone(),
        }
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.type_string())
    }
}

/// Parses `B2`, `A1xA1`, `A1*B2` or `empty`.
pub fn parse_components(s: &str) -> Result<Vec<CartanType>> {
    let s = s.trim();
    if s.is_empty() || s.eq_ignore_ascii_case("empty") {
        return Ok(Vec::new());
    }
    s.split(['x', '*', '×'])
        .map(|p| p.parse())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemJson {
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: usize,
    pub roots: Vec<Vec<i64>>,
}
