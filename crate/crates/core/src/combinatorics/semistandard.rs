use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use super::{all_multipartitions, MultiPartition, Node, StdTableau};
use crate::error::{Error, Result};

/// An entry `(i, s)`: row `i` of component `s` of the type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Label {
    pub row: usize,
    pub comp: usize,
}

impl Label {
    pub fn new(row: usize, comp: usize) -> Label {
        Label { row, comp }
    }
}

/// `(i,s) ⪯ (j,t)` iff `s < t`, or `s = t` and `i <= j`.
impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.comp, self.row).cmp(&(other.comp, other.row))
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.row, self.comp].serialize(s)
    }
}

/// A λ-tableau with entries `(i, s)` and a recorded type μ.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LabelledTableau {
    shape: MultiPartition,
    ty: MultiPartition,
    rows: Vec<Vec<Vec<Label>>>,
}

/// Semistandard tableaux are labelled tableaux that pass [`LabelledTableau::is_semistandard`].
pub type SStdTableau = LabelledTableau;

impl LabelledTableau {
    pub fn new(shape: MultiPartition, ty: MultiPartition, rows: Vec<Vec<Vec<Label>>>) -> Result<LabelledTableau> {
        let fits = rows.len() == shape.ell()
            && rows.iter().enumerate().all(|(s, c)| c.iter().map(Vec::len).collect::<Vec<_>>() == shape.component(s + 1));
        let mut counts: BTreeMap<Label, usize> = BTreeMap::new();
        for l in rows.iter().flatten().flatten() {
            *counts.entry(*l).or_default() += 1;
        }
        let expected: BTreeMap<Label, usize> = ty
            .components()
            .iter()
            .enumerate()
            .flat_map(|(s, p)| p.iter().enumerate().map(move |(i, &len)| (Label::new(i + 1, s + 1), len)))
            .collect();
        if !fits || counts != expected || shape.ell() != ty.ell() {
            return Err(Error::InvalidMultiPartition(format!("labelled tableau does not match shape {shape} and type {ty}")));
        }
        Ok(LabelledTableau { shape, ty, rows })
    }

    pub fn shape(&self) -> &MultiPartition {
        &self.shape
    }

    /// The type μ.
    pub fn ty(&self) -> &MultiPartition {
        &self.ty
    }

    pub fn rows(&self) -> &[Vec<Vec<Label>>] {
        &self.rows
    }

    pub fn entry(&self, node: &Node) -> Label {
        self.rows[node.comp - 1][node.row - 1][node.col - 1]
    }

    pub fn reading_word(&self) -> Vec<Label> {
        self.rows.iter().flatten().flatten().copied().collect()
    }

    /// Rows weakly increase, columns strictly increase, and `(j,t)` sits in component `s` only if `t >= s`.
    pub fn is_semistandard(&self) -> bool {
        for (s, comp) in self.rows.iter().enumerate() {
            for (r, row) in comp.iter().enumerate() {
                if row.iter().any(|l| l.comp < s + 1) {
                    return false;
                }
                if row.windows(2).any(|w| w[0] > w[1]) {
                    return false;
                }
                if r > 0 && row.iter().zip(&comp[r - 1]).any(|(x, y)| x <= y) {
                    return false;
                }
            }
        }
        true
    }

    /// Compact text form, e.g. `112/3` for one component, `(1|1)` style separators otherwise.
    pub fn compact(&self) -> String {
        let show = |l: &Label| {
            if self.ty.ell() == 1 {
                l.row.to_string()
            } else {
                format!("{}_{}", l.row, l.comp)
            }
        };
        let comps: Vec<String> = self
            .rows
            .iter()
            .map(|c| c.iter().map(|r| r.iter().map(show).collect::<Vec<_>>().join(if self.ty.ell() == 1 { "" } else { "," })).collect::<Vec<_>>().join("/"))
            .collect();
        if comps.len() == 1 {
            comps[0].clone()
        } else {
            format!("({})", comps.join("|"))
        }
    }
}

impl fmt::Display for LabelledTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

impl Serialize for LabelledTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

/// Position of each entry of `t^μ`: entry `k` lies in row `i` of component `s`.
fn initial_labels(mu: &MultiPartition) -> Vec<Label> {
    let mut out = Vec::with_capacity(mu.size());
    for (s, p) in mu.components().iter().enumerate() {
        for (i, &len) in p.iter().enumerate() {
            out.extend(std::iter::repeat_n(Label::new(i + 1, s + 1), len));
        }
    }
    out
}

impl StdTableau {
    /// `μ(t)`: replaces each entry `j` by the row and component of `j` in `t^μ`.
    pub fn type_map(&self, mu: &MultiPartition) -> Result<LabelledTableau> {
        if self.shape().size() != mu.size() || self.shape().ell() != mu.ell() {
            return Err(Error::SizeMismatch(self.shape().size(), mu.size()));
        }
        let labels = initial_labels(mu);
        let rows = self.rows().iter().map(|c| c.iter().map(|r| r.iter().map(|&j| labels[j - 1]).collect()).collect()).collect();
        Ok(LabelledTableau { shape: self.shape().clone(), ty: mu.clone(), rows })
    }
}

/// `T^μ = μ(t^μ)`.
pub fn initial_semistandard(mu: &MultiPartition) -> SStdTableau {
    StdTableau::initial(mu).type_map(mu).expect("same shape")
}

/// `SStd(λ, μ)`, ordered by reading word.
pub fn semistandard_tableaux(lambda: &MultiPartition, mu: &MultiPartition) -> Vec<SStdTableau> {
    if lambda.size() != mu.size() || lambda.ell() != mu.ell() {
        return Vec::new();
    }
    let mut remaining: Vec<(Label, usize)> = Vec::new();
    for (s, p) in mu.components().iter().enumerate() {
        for (i, &len) in p.iter().enumerate() {
            remaining.push((Label::new(i + 1, s + 1), len));
        }
    }
    remaining.sort();
    let nodes = lambda.nodes();
    let mut fill: Vec<Vec<Vec<Label>>> =
        lambda.components().iter().map(|p| p.iter().map(|&len| Vec::with_capacity(len)).collect()).collect();
    let mut out = Vec::new();

    fn go(
        k: usize,
        nodes: &[Node],
        remaining: &mut [(Label, usize)],
        fill: &mut Vec<Vec<Vec<Label>>>,
        lambda: &MultiPartition,
        mu: &MultiPartition,
        out: &mut Vec<SStdTableau>,
    ) {
        if k == nodes.len() {
            out.push(LabelledTableau { shape: lambda.clone(), ty: mu.clone(), rows: fill.clone() });
            return;
        }
        let node = nodes[k];
        let (s, r, c) = (node.comp - 1, node.row - 1, node.col - 1);
        let left = if c > 0 { Some(fill[s][r][c - 1]) } else { None };
        let above = if r > 0 { Some(fill[s][r - 1][c]) } else { None };
        for idx in 0..remaining.len() {
            let (label, count) = remaining[idx];
            if count == 0 || label.comp < node.comp {
                continue;
            }
            if left.is_some_and(|l| label < l) || above.is_some_and(|a| label <= a) {
                continue;
            }
            remaining[idx].1 -= 1;
            fill[s][r].push(label);
            go(k + 1, nodes, remaining, fill, lambda, mu, out);
            fill[s][r].pop();
            remaining[idx].1 += 1;
        }
    }

    go(0, &nodes, &mut remaining, &mut fill, lambda, mu, &mut out);
    out
}

/// All semistandard tableaux of type μ, shapes ordered by a linear extension of
/// dominance (most dominant first), ties broken by reading word. The last one is `T^μ`.
pub fn layer_order(mu: &MultiPartition) -> Vec<SStdTableau> {
    all_multipartitions(mu.ell(), mu.size()).iter().flat_map(|l| semistandard_tableaux(l, mu)).collect()
}

/// `S ∪ β`: adds β to `S` with the label `(z, ℓ)` of the lowest addable node of the type.
pub fn attach_node(s: &SStdTableau, beta: &Node) -> Result<SStdTableau> {
    let shape = s.shape.add_node(beta)?;
    let omega = s.ty.lowest_addable();
    let ty = s.ty.add_node(&omega)?;
    let mut rows = s.rows.clone();
    let comp = &mut rows[beta.comp - 1];
    if beta.row > comp.len() {
        comp.push(Vec::new());
    }
    comp[beta.row - 1].push(Label::new(omega.row, omega.comp));
    Ok(LabelledTableau { shape, ty, rows })
}

/// `SStd(S, μ∪ω)`: the tableaux `S ∪ β` over addable β that are semistandard,
/// in decreasing order of β.
pub fn layer_tableaux(s: &SStdTableau) -> Vec<SStdTableau> {
    s.shape
        .addable_nodes()
        .iter()
        .map(|b| attach_node(s, b).expect("addable"))
        .filter(LabelledTableau::is_semistandard)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::standard_tableaux;
    use std::collections::HashSet;

    fn part(p: &[usize]) -> MultiPartition {
        MultiPartition::partition(p)
    }

    fn row_labels(rows: &[&[usize]]) -> Vec<Vec<Vec<Label>>> {
        vec![rows.iter().map(|r| r.iter().map(|&i| Label::new(i, 1)).collect()).collect()]
    }

    #[test]
    fn unique_tableau_of_own_type() {
        for mu in [part(&[3, 3, 1]), part(&[2, 1]), MultiPartition::new(vec![vec![1], vec![1]]).unwrap()] {
            let ss = semistandard_tableaux(&mu, &mu);
            assert_eq!(ss, vec![initial_semistandard(&mu)]);
            assert_eq!(layer_order(&mu).last(), Some(&initial_semistandard(&mu)));
        }
    }

    #[test]
    fn hook_type_count() {
        let ss = semistandard_tableaux(&part(&[3, 1]), &part(&[2, 1, 1]));
        let words: Vec<String> = ss.iter().map(|t| t.compact()).collect();
        assert_eq!(words, vec!["112/3", "113/2"]);
    }

    #[test]
    fn remark_tableau_is_semistandard() {
        let t = LabelledTableau::new(part(&[4, 2, 2]), part(&[3, 3, 1, 1]), row_labels(&[&[1, 1, 1, 2], &[2, 2], &[3, 4]])).unwrap();
        assert!(t.is_semistandard());
        assert!(semistandard_tableaux(&part(&[4, 2, 2]), &part(&[3, 3, 1, 1])).contains(&t));
    }

    #[test]
    fn type_map_examples() {
        let mu = part(&[2, 1]);
        let t = StdTableau::new(mu.clone(), vec![vec![vec![1, 3], vec![2]]]).unwrap();
        let m = t.type_map(&mu).unwrap();
        assert_eq!(m.rows(), &row_labels(&[&[1, 2], &[1]]));
        assert!(!m.is_semistandard());
        let ones = part(&[1, 1, 1]);
        for t in standard_tableaux(&part(&[2, 1])) {
            assert!(t.type_map(&ones).unwrap().is_semistandard());
        }
    }

    #[test]
    fn semistandard_matches_brute_force() {
        // brute force: type images of all standard tableaux, filtered
        for (ell, n) in [(1, 4), (2, 3), (3, 2)] {
            let all = all_multipartitions(ell, n);
            for mu in &all {
                for lam in &all {
                    let fast: HashSet<_> = semistandard_tableaux(lam, mu).into_iter().collect();
                    let brute: HashSet<_> = standard_tableaux(lam)
                        .iter()
                        .map(|t| t.type_map(mu).unwrap())
                        .filter(LabelledTableau::is_semistandard)
                        .collect();
                    assert_eq!(fast, brute, "λ={lam} μ={mu}");
                    if !fast.is_empty() {
                        assert!(lam.dominates(mu).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn layer_order_examples() {
        let mu = MultiPartition::new(vec![vec![1], vec![1]]).unwrap();
        let shapes: Vec<_> = layer_order(&mu).iter().map(|s| s.shape().clone()).collect();
        assert_eq!(
            shapes,
            vec![
                MultiPartition::new(vec![vec![2], vec![]]).unwrap(),
                MultiPartition::new(vec![vec![1, 1], vec![]]).unwrap(),
                mu.clone()
            ]
        );
        assert_eq!(layer_order(&part(&[4])).len(), 1);
        let shapes: Vec<_> = layer_order(&part(&[2, 1])).iter().map(|s| s.shape().clone()).collect();
        assert_eq!(shapes, vec![part(&[3]), part(&[2, 1])]);
    }

    #[test]
    fn layer_decomposition_is_a_partition() {
        for (ell, n) in [(1, 3), (1, 4), (2, 2), (2, 3), (3, 2)] {
            for mu in all_multipartitions(ell, n) {
                let omega = mu.lowest_addable();
                let big = mu.add_node(&omega).unwrap();
                let mut seen = HashSet::new();
                for s in layer_order(&mu) {
                    for u in layer_tableaux(&s) {
                        assert!(u.is_semistandard());
                        assert!(seen.insert(u));
                    }
                }
                let all: HashSet<_> = layer_order(&big).into_iter().collect();
                assert_eq!(seen, all, "μ={mu}");
            }
        }
    }

    #[test]
    fn top_layer_adds_every_addable_node() {
        let mu = part(&[3, 3, 1]);
        let top = layer_tableaux(&initial_semistandard(&mu));
        let shapes: Vec<_> = top.iter().map(|u| u.shape().clone()).collect();
        assert_eq!(shapes, vec![part(&[4, 3, 1]), part(&[3, 3, 2]), part(&[3, 3, 1, 1])]);
    }

    #[test]
    fn row_layer_of_hook_type() {
        // S = 112 of shape (3); its layer holds 1123 and 112/3
        let mu = part(&[2, 1]);
        let s = semistandard_tableaux(&part(&[3]), &mu).pop().unwrap();
        let layer: Vec<String> = layer_tableaux(&s).iter().map(|u| u.compact()).collect();
        assert_eq!(layer, vec!["1123", "112/3"]);
    }

    #[test]
    fn attach_rejects_non_addable() {
        let mu = part(&[2, 1]);
        let s = initial_semistandard(&mu);
        assert!(attach_node(&s, &Node::new(1, 4, 1)).is_err());
    }
}
