//! Weyl group enumeration with canonical reduced words.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::RootSystem;
use crate::error::{Error, Result};

/// Largest total rank for full enumeration.
pub const MAX_WEYL_RANK: usize = 4;

/// An element of W given by its canonical (lexicographically least) reduced
/// word, with the induced permutation of root indices cached.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub word: Vec<usize>,
    pub action: Vec<usize>,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylElementJson {
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: usize,
    pub word: Vec<usize>,
}

/// The enumerated group with left and right simple multiplication tables.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    rank: usize,
    elems: Vec<WeylElement>,
    index: HashMap<Vec<usize>, usize>,
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    npos: usize,
}

/// Inversion count of a root permutation.
pub fn length(action: &[usize], rs: &RootSystem) -> usize {
    (0..rs.num_positive())
        .filter(|&i| !rs.is_positive(action[i]))
        .count()
}

pub fn weyl_group(rs: &RootSystem) -> Result<Vec<WeylElement>> {
    Ok(WeylGroup::new(rs)?.elems)
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    // (a b)(r) = a(b(r))
    b.iter().map(|&r| a[r]).collect()
}

impl WeylGroup {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let n = rs.rank();
        if n > MAX_WEYL_RANK {
            return Err(Error::RankTooLarge {
                rank: n,
                limit: MAX_WEYL_RANK,
                what: "Weyl group enumeration",
            });
        }
        let id: Vec<usize> = (0..rs.num_roots()).collect();
        let mut elems = vec![WeylElement {
            word: vec![],
            action: id.clone(),
        }];
        let mut index = HashMap::from([(id, 0usize)]);
        // Breadth first by length; within a level elements are already in
        // lexicographic order of their words, so the first word that reaches
        // a new element is the least one.
        let mut level = vec![0usize];
        while !level.is_empty() {
            let mut next = Vec::new();
            for &w in &level {
                for s in 0..n {
                    let act = compose(&elems[w].action, rs.reflection_perm(s));
                    if index.contains_key(&act) {
                        continue;
                    }
                    let mut word = elems[w].word.clone();
                    word.push(s);
                    index.insert(act.clone(), elems.len());
                    next.push(elems.len());
                    elems.push(WeylElement { word, action: act });
                }
            }
            level = next;
        }
        let m = elems.len();
        let mut left = vec![vec![0; m]; n];
        let mut right = vec![vec![0; m]; n];
        for s in 0..n {
            let p = rs.reflection_perm(s);
            for (w, e) in elems.iter().enumerate() {
                left[s][w] = index[&compose(p, &e.action)];
                right[s][w] = index[&compose(&e.action, p)];
            }
        }
        let inverse = elems
            .iter()
            .map(|e| {
                let mut inv = vec![0; e.action.len()];
                for (i, &j) in e.action.iter().enumerate() {
                    inv[j] = i;
                }
                index[&inv]
            })
            .collect();
        Ok(WeylGroup {
            rank: n,
            elems,
            index,
            left,
            right,
            inverse,
            npos: rs.num_positive(),
        })
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elems
    }

    pub fn get(&self, w: usize) -> &WeylElement {
        &self.elems[w]
    }

    pub fn word(&self, w: usize) -> &[usize] {
        &self.elems[w].word
    }

    pub fn len_of(&self, w: usize) -> usize {
        self.elems[w].word.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn longest(&self) -> usize {
        self.elems.len() - 1
    }

    /// Index of `s w`.
    pub fn lmul(&self, s: usize, w: usize) -> usize {
        self.left[s][w]
    }

    /// Index of `w s`.
    pub fn rmul(&self, w: usize, s: usize) -> usize {
        self.right[s][w]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.elems[b].word.iter().fold(a, |w, &s| self.rmul(w, s))
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inverse[w]
    }

    /// Element represented by an arbitrary word.
    pub fn from_word(&self, word: &[usize]) -> Result<usize> {
        if let Some(&s) = word.iter().find(|&&s| s >= self.rank) {
            return Err(Error::Parse(format!("simple reflection index {s} out of range")));
        }
        Ok(word.iter().fold(0, |w, &s| self.rmul(w, s)))
    }

    pub fn index_of_action(&self, action: &[usize]) -> Option<usize> {
        self.index.get(action).copied()
    }

    pub fn to_json(&self, w: usize, rs: &RootSystem) -> WeylElementJson {
        WeylElementJson {
            ty: rs.type_string(),
            rank: self.rank,
            word: self.word(w).to_vec(),
        }
    }

    /// Number of positive roots; equals the length of the longest element.
    pub fn num_positive(&self) -> usize {
        self.npos
    }
}
