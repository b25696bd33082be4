//! Identify the Cartan type of a Cartan matrix, component by component.

use super::{CartanType, Family};
use crate::error::{Error, Result};

/// Splits a Cartan matrix into connected components and names each one.
/// Returns the type together with the node indices of that component.
/// Rank-two double bonds are reported as `B2`.
pub fn classify_cartan(a: &[Vec<i64>]) -> Result<Vec<(CartanType, Vec<usize>)>> {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for j in 0..n {
                if !seen[j] && a[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push((classify_connected(a, &comp)?, comp));
    }
    Ok(out)
}

fn classify_connected(a: &[Vec<i64>], nodes: &[usize]) -> Result<CartanType> {
    let n = nodes.len();
    let bad = || Error::InvalidDatum("Cartan matrix is not of finite type".into());
    if n == 1 {
        return CartanType::new(Family::A, 1);
    }
    let mult = |i: usize, j: usize| a[i][j] * a[j][i];
    let nbrs = |i: usize| nodes.iter().copied().filter(move |&j| j != i && a[i][j] != 0);
    let edges: Vec<(usize, usize, i64)> = nodes
        .iter()
        .flat_map(|&i| nodes.iter().map(move |&j| (i, j)))
        .filter(|&(i, j)| i < j && a[i][j] != 0)
        .map(|(i, j)| (i, j, mult(i, j)))
        .collect();
    if edges.len() != n - 1 {
        return Err(bad());
    }
    let degree = |i: usize| nbrs(i).count();
    if edges.iter().any(|e| e.2 == 3) {
        return if n == 2 { CartanType::new(Family::G, 2) } else { Err(bad()) };
    }
    if let Some(&(i, j, _)) = edges.iter().find(|e| e.2 == 2) {
        if edges.iter().filter(|e| e.2 == 2).count() > 1 || nodes.iter().any(|&x| degree(x) > 2) {
            return Err(bad());
        }
        if n == 2 {
            return CartanType::new(Family::B, 2);
        }
        let (di, dj) = (degree(i), degree(j));
        if di == 2 && dj == 2 {
            return if n == 4 { CartanType::new(Family::F, 4) } else { Err(bad()) };
        }
        // the leaf of the double bond is short for B and long for C
        let leaf = if di == 1 { i } else { j };
        let other = if leaf == i { j } else { i };
        let short_leaf = a[leaf][other] == -2;
        return CartanType::new(if short_leaf { Family::B } else { Family::C }, n);
    }
    let branch: Vec<usize> = nodes.iter().copied().filter(|&x| degree(x) == 3).collect();
    match branch.as_slice() {
        [] => CartanType::new(Family::A, n),
        [b] => {
            let mut arms: Vec<usize> = nbrs(*b)
                .map(|start| {
                    let (mut prev, mut cur, mut len) = (*b, start, 1);
                    loop {
                        let next: Vec<usize> = nbrs(cur).filter(|&x| x != prev).collect();
                        match next.as_slice() {
                            [] => return len,
                            [x] => {
                                prev = cur;
                                cur = *x;
                                len += 1;
                            }
                            _ => return usize::MAX,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => CartanType::new(Family::D, n),
                [1, 2, 2] => CartanType::new(Family::E, 6),
                [1, 2, 3] => CartanType::new(Family::E, 7),
                [1, 2, 4] => CartanType::new(Family::E, 8),
                _ => Err(bad()),
            }
        }
        _ => Err(bad()),
    }
}
