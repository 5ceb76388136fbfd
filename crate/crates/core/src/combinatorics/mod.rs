//! Multipartitions, nodes, residues and tableaux.

mod semistandard;
mod tableau;

pub use semistandard::{
    attach_node, initial_semistandard, layer_order, layer_tableaux, semistandard_tableaux, Label, LabelledTableau,
    SStdTableau,
};
pub use tableau::{standard_tableaux, StdTableau};

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::Scalar;
use crate::error::{Error, Result};
use crate::hecke::Params;

/// An ℓ-tuple of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiPartition {
    parts: Vec<Vec<usize>>,
}

/// A node `(row, col, component)`, all one-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

impl Node {
    pub fn new(row: usize, col: usize, comp: usize) -> Node {
        Node { row, col, comp }
    }

    /// `q^(c-r) Q_s`.
    pub fn residue(&self, params: &Params) -> Scalar {
        let shift = self.col as i64 - self.row as i64;
        let qpow = params.q.pow(shift).expect("q is invertible");
        &qpow * &params.big_q[self.comp - 1]
    }

    /// Position in the order where the node with the smaller component, then the
    /// smaller row, is the larger one.
    fn order_key(&self) -> (usize, usize) {
        (self.comp, self.row)
    }
}

impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `α > β` iff `α` lies in an earlier component, or the same component and a higher row.
/// Addable (and removable) nodes of one multipartition are totally ordered by this.
impl Ord for Node {
    fn cmp(&self, other: &Self) -> Ordering {
        other.order_key().cmp(&self.order_key()).then(other.col.cmp(&self.col))
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.comp)
    }
}

impl MultiPartition {
    pub fn new(mut parts: Vec<Vec<usize>>) -> Result<MultiPartition> {
        if parts.is_empty() {
            return Err(Error::InvalidMultiPartition("at least one component is required".into()));
        }
        for p in parts.iter_mut() {
            while p.last() == Some(&0) {
                p.pop();
            }
            if p.windows(2).any(|w| w[0] < w[1]) || p.contains(&0) {
                return Err(Error::InvalidMultiPartition(format!("{p:?} is not a partition")));
            }
        }
        Ok(MultiPartition { parts })
    }

    /// Single-component shorthand.
    pub fn partition(parts: &[usize]) -> MultiPartition {
        MultiPartition::new(vec![parts.to_vec()]).expect("valid partition")
    }

    pub fn empty(ell: usize) -> MultiPartition {
        MultiPartition { parts: vec![Vec::new(); ell] }
    }

    pub fn ell(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().flatten().sum()
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn component(&self, s: usize) -> &[usize] {
        &self.parts[s - 1]
    }

    /// Length of row `r` of component `s` (zero past the last row).
    pub fn row_len(&self, r: usize, s: usize) -> usize {
        self.parts[s - 1].get(r - 1).copied().unwrap_or(0)
    }

    /// `a_s = |λ^(1)| + .. + |λ^(s-1)|` for `1 <= s <= ℓ`, and `n - 1` for `s = ℓ + 1`.
    pub fn offset(&self, s: usize) -> usize {
        if s == self.ell() + 1 {
            return self.size().saturating_sub(1);
        }
        self.parts[..s - 1].iter().flatten().sum()
    }

    pub fn contains(&self, node: &Node) -> bool {
        node.comp >= 1 && node.comp <= self.ell() && node.row >= 1 && node.col >= 1 && node.col <= self.row_len(node.row, node.comp)
    }

    /// Nodes in row-reading order: components in order, rows top to bottom, left to right.
    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.size());
        for (s, p) in self.parts.iter().enumerate() {
            for (r, &len) in p.iter().enumerate() {
                for c in 1..=len {
                    out.push(Node::new(r + 1, c, s + 1));
                }
            }
        }
        out
    }

    /// `(start, len)` of each row of `t^λ`, zero-based start.
    pub fn row_blocks(&self) -> Vec<(usize, usize)> {
        let mut start = 0;
        let mut out = Vec::new();
        for p in &self.parts {
            for &len in p {
                out.push((start, len));
                start += len;
            }
        }
        out
    }

    /// The partial sums compared by dominance, one per (component, row) up to `n` rows.
    pub fn partial_sums(&self) -> Vec<usize> {
        let n = self.size();
        let mut out = Vec::with_capacity(self.ell() * n.max(1));
        let mut before = 0;
        for p in &self.parts {
            let mut acc = before;
            for k in 0..n.max(1) {
                acc += p.get(k).copied().unwrap_or(0);
                out.push(acc);
            }
            before += p.iter().sum::<usize>();
        }
        out
    }

    pub fn dominates(&self, other: &MultiPartition) -> Result<bool> {
        if self.ell() != other.ell() {
            return Err(Error::SizeMismatch(self.ell(), other.ell()));
        }
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(self.size(), other.size()));
        }
        Ok(self.partial_sums().iter().zip(other.partial_sums()).all(|(a, b)| *a >= b))
    }

    pub fn strictly_dominates(&self, other: &MultiPartition) -> Result<bool> {
        Ok(self != other && self.dominates(other)?)
    }

    /// Addable nodes listed in decreasing order, so the last one is the lowest.
    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (s, p) in self.parts.iter().enumerate() {
            for r in 0..=p.len() {
                let len = p.get(r).copied().unwrap_or(0);
                let above = if r == 0 { usize::MAX } else { p[r - 1] };
                if len < above {
                    out.push(Node::new(r + 1, len + 1, s + 1));
                }
            }
        }
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    /// Removable nodes listed in decreasing order.
    pub fn removable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (s, p) in self.parts.iter().enumerate() {
            for (r, &len) in p.iter().enumerate() {
                let below = p.get(r + 1).copied().unwrap_or(0);
                if len > below {
                    out.push(Node::new(r + 1, len, s + 1));
                }
            }
        }
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    /// The lowest addable node `(z, 1, ℓ)`.
    pub fn lowest_addable(&self) -> Node {
        let l = self.ell();
        Node::new(self.parts[l - 1].len() + 1, 1, l)
    }

    pub fn add_node(&self, node: &Node) -> Result<MultiPartition> {
        if !self.addable_nodes().contains(node) {
            return Err(Error::NotAddable(node.to_string()));
        }
        let mut parts = self.parts.clone();
        let p = &mut parts[node.comp - 1];
        if node.row > p.len() {
            p.push(1);
        } else {
            p[node.row - 1] += 1;
        }
        Ok(MultiPartition { parts })
    }

    pub fn remove_node(&self, node: &Node) -> Result<MultiPartition> {
        if !self.removable_nodes().contains(node) {
            return Err(Error::NotRemovable(node.to_string()));
        }
        let mut parts = self.parts.clone();
        let p = &mut parts[node.comp - 1];
        p[node.row - 1] -= 1;
        if p[node.row - 1] == 0 {
            p.pop();
        }
        Ok(MultiPartition { parts })
    }

    /// Residues of all nodes of the diagram, in reading order.
    pub fn residues(&self, params: &Params) -> Vec<Scalar> {
        self.nodes().iter().map(|n| n.residue(params)).collect()
    }

    /// Sort key: a linear extension of dominance (more dominant sorts first).
    pub(crate) fn layer_key(&self) -> impl Ord {
        std::cmp::Reverse((self.partial_sums(), self.parts.concat()))
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &Vec<usize>| format!("({})", p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
        if self.parts.len() == 1 {
            f.write_str(&show(&self.parts[0]))
        } else {
            write!(f, "({})", self.parts.iter().map(show).collect::<Vec<_>>().join(","))
        }
    }
}

impl fmt::Debug for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for MultiPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<Vec<usize>>::deserialize(d)?;
        MultiPartition::new(v).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `Λ⁺_{ℓ,n}`, sorted so that more dominant multipartitions come first.
pub fn all_multipartitions(ell: usize, n: usize) -> Vec<MultiPartition> {
    assert!(ell >= 1, "ℓ must be positive");
    let mut out = Vec::new();
    fn go(ell: usize, left: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<MultiPartition>) {
        if cur.len() == ell - 1 {
            for p in partitions(left) {
                let mut parts = cur.clone();
                parts.push(p);
                out.push(MultiPartition { parts });
            }
            return;
        }
        for k in 0..=left {
            for p in partitions(k) {
                cur.push(p);
                go(ell, left - k, cur, out);
                cur.pop();
            }
        }
    }
    go(ell, n, &mut Vec::new(), &mut out);
    out.sort_by_key(|m| m.layer_key());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(parts: Vec<Vec<usize>>) -> MultiPartition {
        MultiPartition::new(parts).unwrap()
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(
            all_multipartitions(1, 2),
            vec![MultiPartition::partition(&[2]), MultiPartition::partition(&[1, 1])]
        );
        assert_eq!(all_multipartitions(2, 1), vec![mp(vec![vec![1], vec![]]), mp(vec![vec![], vec![1]])]);
        assert_eq!(all_multipartitions(2, 2).len(), 5);
        assert_eq!(all_multipartitions(1, 0), vec![MultiPartition::empty(1)]);
    }

    #[test]
    fn enumeration_counts_match_brute_force() {
        // number of ℓ-multipartitions of n, by brute force over compositions of n into ℓ parts
        for ell in 1..=3 {
            for n in 0..=5 {
                let brute: usize = compositions(n, ell).iter().map(|c| c.iter().map(|&k| partitions(k).len()).product::<usize>()).sum();
                let all = all_multipartitions(ell, n);
                assert_eq!(all.len(), brute);
                let mut dedup = all.clone();
                dedup.sort();
                dedup.dedup();
                assert_eq!(dedup.len(), all.len());
            }
        }
    }

    fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 1 {
            return vec![vec![n]];
        }
        (0..=n)
            .flat_map(|a| compositions(n - a, k - 1).into_iter().map(move |mut c| {
                c.insert(0, a);
                c
            }))
            .collect()
    }

    #[test]
    fn dominance_examples() {
        let a = MultiPartition::partition(&[4, 3, 1]);
        let b = MultiPartition::partition(&[4, 2, 2]);
        assert!(a.dominates(&b).unwrap());
        assert!(!b.dominates(&a).unwrap());
        assert!(a.dominates(&a).unwrap());
        let c = mp(vec![vec![1], vec![1]]);
        let d = mp(vec![vec![], vec![2]]);
        assert!(c.dominates(&d).unwrap());
        assert!(a.dominates(&MultiPartition::partition(&[4, 3])).is_err());
    }

    #[test]
    fn layer_order_extends_dominance() {
        for (ell, n) in [(1, 5), (2, 3), (3, 2)] {
            let all = all_multipartitions(ell, n);
            for i in 0..all.len() {
                for j in 0..i {
                    assert!(!all[i].strictly_dominates(&all[j]).unwrap(), "{} before {}", all[j], all[i]);
                }
            }
        }
    }

    #[test]
    fn addable_nodes_of_remark_shape() {
        let mu = MultiPartition::partition(&[3, 3, 1]);
        let add = mu.addable_nodes();
        assert_eq!(add, vec![Node::new(1, 4, 1), Node::new(3, 2, 1), Node::new(4, 1, 1)]);
        let shapes: Vec<_> = add.iter().map(|a| mu.add_node(a).unwrap()).collect();
        assert_eq!(
            shapes,
            vec![
                MultiPartition::partition(&[4, 3, 1]),
                MultiPartition::partition(&[3, 3, 2]),
                MultiPartition::partition(&[3, 3, 1, 1])
            ]
        );
        assert_eq!(mu.lowest_addable(), Node::new(4, 1, 1));
        // (4,2,2) is not obtained by adding a node to (3,3,1)
        assert!(!shapes.contains(&MultiPartition::partition(&[4, 2, 2])));
    }

    #[test]
    fn addable_nodes_of_empty_bipartition() {
        let e = MultiPartition::empty(2);
        assert_eq!(e.addable_nodes(), vec![Node::new(1, 1, 1), Node::new(1, 1, 2)]);
        assert_eq!(e.lowest_addable(), Node::new(1, 1, 2));
    }

    #[test]
    fn removable_nodes_and_errors() {
        let l = MultiPartition::partition(&[2, 1]);
        assert_eq!(l.removable_nodes(), vec![Node::new(1, 2, 1), Node::new(2, 1, 1)]);
        assert!(l.remove_node(&Node::new(1, 1, 1)).is_err());
        assert!(l.add_node(&Node::new(2, 3, 1)).is_err());
    }

    #[test]
    fn node_order_matches_dominance_of_results() {
        for ell in 1..=3 {
            for n in 0..=4 {
                for mu in all_multipartitions(ell, n) {
                    let add = mu.addable_nodes();
                    for i in 0..add.len() {
                        for j in 0..add.len() {
                            let a = mu.add_node(&add[i]).unwrap();
                            let b = mu.add_node(&add[j]).unwrap();
                            assert_eq!(add[i] > add[j], a.strictly_dominates(&b).unwrap());
                        }
                        assert_eq!(mu.add_node(&add[i]).unwrap().remove_node(&add[i]).unwrap(), mu);
                    }
                    assert_eq!(*add.last().unwrap(), mu.lowest_addable());
                    for r in mu.removable_nodes() {
                        assert_eq!(mu.remove_node(&r).unwrap().add_node(&r).unwrap(), mu);
                    }
                }
            }
        }
    }

    #[test]
    fn offsets() {
        let l = mp(vec![vec![2], vec![1], vec![1, 1]]);
        assert_eq!(l.offset(1), 0);
        assert_eq!(l.offset(2), 2);
        assert_eq!(l.offset(3), 3);
        assert_eq!(l.offset(4), 4);
    }

    #[test]
    fn json_shape() {
        let l = mp(vec![vec![1], vec![]]);
        assert_eq!(serde_json::to_string(&l).unwrap(), "[[1],[]]");
        let back: MultiPartition = serde_json::from_str("[[2,1],[1]]").unwrap();
        assert_eq!(back.size(), 4);
        assert!(serde_json::from_str::<MultiPartition>("[[1,2]]").is_err());
    }
}
