use serde::{Serialize, Serializer};

use super::{MultiPartition, Node};
use crate::error::{Error, Result};
use crate::symgroup::Perm;

/// A standard λ-tableau: rows and columns of each component increase.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StdTableau {
    shape: MultiPartition,
    /// `rows[s][r][c]`, zero-based indices, entries in `1..=n`.
    rows: Vec<Vec<Vec<usize>>>,
}

impl StdTableau {
    /// Builds a tableau from per-component row lists, checking standardness.
    pub fn new(shape: MultiPartition, rows: Vec<Vec<Vec<usize>>>) -> Result<StdTableau> {
        let bad = || Error::InvalidMultiPartition(format!("{rows:?} is not a standard tableau of shape {shape}"));
        if rows.len() != shape.ell() {
            return Err(bad());
        }
        for (s, comp) in rows.iter().enumerate() {
            let lens: Vec<usize> = comp.iter().map(Vec::len).collect();
            if lens != shape.component(s + 1) {
                return Err(bad());
            }
            for (r, row) in comp.iter().enumerate() {
                if row.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(bad());
                }
                if r > 0 && row.iter().zip(&comp[r - 1]).any(|(x, y)| x <= y) {
                    return Err(bad());
                }
            }
        }
        let mut seen: Vec<usize> = rows.iter().flatten().flatten().copied().collect();
        seen.sort_unstable();
        if seen != (1..=shape.size()).collect::<Vec<_>>() {
            return Err(bad());
        }
        Ok(StdTableau { shape, rows })
    }

    /// `t^λ`: entries `1..n` in row-reading order.
    pub fn initial(shape: &MultiPartition) -> StdTableau {
        let mut k = 0;
        let rows = shape
            .components()
            .iter()
            .map(|p| {
                p.iter()
                    .map(|&len| {
                        let row = (k + 1..=k + len).collect();
                        k += len;
                        row
                    })
                    .collect()
            })
            .collect();
        StdTableau { shape: shape.clone(), rows }
    }

    pub fn shape(&self) -> &MultiPartition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Vec<usize>>] {
        &self.rows
    }

    pub fn entry(&self, node: &Node) -> usize {
        self.rows[node.comp - 1][node.row - 1][node.col - 1]
    }

    /// Node containing `k`.
    pub fn position(&self, k: usize) -> Option<Node> {
        self.shape.nodes().into_iter().find(|n| self.entry(n) == k)
    }

    /// Entries in row-reading order.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().flatten().copied().collect()
    }

    /// `d(t)` with `t = t^λ d(t)`.
    pub fn d_perm(&self) -> Perm {
        Perm::from_images(&self.reading_word()).expect("a standard tableau is a bijection")
    }

    /// Removes the node holding `n`; the result is a standard tableau of size `n - 1`.
    pub fn restrict(&self) -> StdTableau {
        let n = self.shape.size();
        let mut rows = self.rows.clone();
        for comp in rows.iter_mut() {
            for row in comp.iter_mut() {
                row.retain(|&x| x != n);
            }
            comp.retain(|r| !r.is_empty());
        }
        let shape = MultiPartition::new(rows.iter().map(|c| c.iter().map(Vec::len).collect()).collect())
            .expect("removing the largest entry leaves a multipartition");
        StdTableau { shape, rows }
    }

    /// Places `n + 1` at an addable node.
    pub fn extend(&self, node: &Node) -> Result<StdTableau> {
        let shape = self.shape.add_node(node)?;
        let mut rows = self.rows.clone();
        let comp = &mut rows[node.comp - 1];
        if node.row > comp.len() {
            comp.push(Vec::new());
        }
        comp[node.row - 1].push(self.shape.size() + 1);
        Ok(StdTableau { shape, rows })
    }
}

impl Serialize for StdTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

/// All standard λ-tableaux, ordered by reading word.
pub fn standard_tableaux(shape: &MultiPartition) -> Vec<StdTableau> {
    if shape.size() == 0 {
        return vec![StdTableau::initial(shape)];
    }
    let mut out = Vec::new();
    for r in shape.removable_nodes() {
        let smaller = shape.remove_node(&r).expect("removable");
        for t in standard_tableaux(&smaller) {
            out.push(t.extend(&r).expect("addable after removal"));
        }
    }
    out.sort_by_key(|t| t.reading_word());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::all_multipartitions;

    fn mp(parts: Vec<Vec<usize>>) -> MultiPartition {
        MultiPartition::new(parts).unwrap()
    }

    #[test]
    fn single_row_has_one_tableau() {
        let l = MultiPartition::partition(&[4]);
        let ts = standard_tableaux(&l);
        assert_eq!(ts.len(), 1);
        assert!(ts[0].d_perm().is_identity());
    }

    #[test]
    fn hook_and_bipartition_counts() {
        assert_eq!(standard_tableaux(&MultiPartition::partition(&[2, 1])).len(), 2);
        let l = mp(vec![vec![1], vec![1]]);
        let ts = standard_tableaux(&l);
        assert_eq!(ts.len(), 2);
        let init = StdTableau::initial(&l);
        assert_eq!(init.rows(), &[vec![vec![1]], vec![vec![2]]]);
        assert!(ts.contains(&init));
    }

    #[test]
    fn d_perm_moves_initial_to_t() {
        let l = MultiPartition::partition(&[2, 1]);
        for t in standard_tableaux(&l) {
            let d = t.d_perm();
            // entry of t at a node = image under d of the entry of t^λ at that node
            let init = StdTableau::initial(&l);
            for node in l.nodes() {
                assert_eq!(d.image(init.entry(&node)), t.entry(&node));
            }
        }
        assert!(StdTableau::initial(&l).d_perm().is_identity());
    }

    #[test]
    fn sum_of_squares_is_dimension() {
        for (ell, n, dim) in [(2, 2, 8usize), (1, 4, 24), (2, 3, 48), (3, 2, 18)] {
            let total: usize = all_multipartitions(ell, n).iter().map(|l| standard_tableaux(l).len().pow(2)).sum();
            assert_eq!(total, dim);
        }
    }

    #[test]
    fn branching_count() {
        for ell in 1..=3 {
            for n in 0..=4 {
                if ell == 3 && n == 4 {
                    continue;
                }
                for mu in all_multipartitions(ell, n) {
                    let lhs: usize = mu.addable_nodes().iter().map(|a| standard_tableaux(&mu.add_node(a).unwrap()).len()).sum();
                    assert_eq!(lhs, ell * (n + 1) * standard_tableaux(&mu).len(), "{mu}");
                }
            }
        }
    }

    #[test]
    fn rejects_non_standard() {
        let l = MultiPartition::partition(&[2, 1]);
        assert!(StdTableau::new(l.clone(), vec![vec![vec![2, 1], vec![3]]]).is_err());
        assert!(StdTableau::new(l.clone(), vec![vec![vec![1, 3], vec![2]]]).is_ok());
        assert!(StdTableau::new(l, vec![vec![vec![1, 2], vec![2]]]).is_err());
    }

    #[test]
    fn restrict_inverts_extend() {
        let l = mp(vec![vec![2], vec![1]]);
        for t in standard_tableaux(&l) {
            for a in t.shape().addable_nodes() {
                assert_eq!(t.extend(&a).unwrap().restrict(), t);
            }
        }
    }
}
