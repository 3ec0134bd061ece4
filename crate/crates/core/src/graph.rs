//! Multigraphs and their covariants in `S^(d)`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symmetric::{dn_membership_certificate, realize_dn_tabloid, DnCertificate, DnTabloid};
use crate::tensor::Filling;

/// A loopless multigraph on `1..=n` with every degree at most `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MultiGraph {
    n: usize,
    d: usize,
    edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    /// Edges are stored with the smaller endpoint first, sorted.
    pub fn new(n: usize, d: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut norm = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::EntryOutOfRange { entry: v, bound: n });
                }
            }
            if a == b {
                return Err(Error::Parse(format!("loop at vertex {a}")));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        let g = MultiGraph { n, d, edges: norm };
        for v in 1..=n {
            let degree = g.degree(v);
            if degree > d {
                return Err(Error::DegreeBound { vertex: v, degree, bound: d });
            }
        }
        Ok(g)
    }

    pub fn edgeless(n: usize, d: usize) -> Self {
        MultiGraph { n, d, edges: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|&(a, b)| (a == v) as usize + (b == v) as usize).sum()
    }

    /// Same graph with a different degree bound.
    pub fn with_d(&self, d: usize) -> Result<Self> {
        Self::new(self.n, d, self.edges.clone())
    }

    /// More edges than vertices.
    pub fn is_rich(&self) -> bool {
        self.edges.len() > self.n
    }

    pub fn contains_triangle(&self) -> bool {
        let adj = |a: usize, b: usize| self.edges.contains(&(a.min(b), a.max(b)));
        (1..=self.n).any(|a| (a + 1..=self.n).any(|b| adj(a, b) && (b + 1..=self.n).any(|c| adj(a, c) && adj(b, c))))
    }

    /// Whether `other`'s edge multiset is contained in ours.
    pub fn contains_edges(&self, other: &[(usize, usize)]) -> bool {
        let mut rest = self.edges.clone();
        other.iter().all(|&(a, b)| {
            let e = (a.min(b), a.max(b));
            match rest.iter().position(|&x| x == e) {
                Some(i) => {
                    rest.swap_remove(i);
                    true
                }
                None => false,
            }
        })
    }
}

impl fmt::Display for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} d={};", self.n, self.d)?;
        for (a, b) in &self.edges {
            write!(f, " {a}-{b}")?;
        }
        Ok(())
    }
}

impl FromStr for MultiGraph {
    type Err = Error;

    /// Parses `"n=4 d=3; 1-2 1-2 2-3 3-4 3-1"`. Tokens may be spread over
    /// several lines; `#` starts a comment.
    fn from_str(s: &str) -> Result<Self> {
        let mut n = None;
        let mut d = None;
        let mut edges = Vec::new();
        let bad = |t: &str| Error::Parse(format!("bad graph token {t:?}"));
        let num = |t: &str, v: &str| v.parse::<usize>().map_err(|_| bad(t));
        for line in s.lines() {
            let line = line.split('#').next().unwrap_or("");
            for tok in line.split(|c: char| c.is_whitespace() || c == ';' || c == ',').filter(|t| !t.is_empty()) {
                if let Some(v) = tok.strip_prefix("n=") {
                    n = Some(num(tok, v)?);
                } else if let Some(v) = tok.strip_prefix("d=") {
                    d = Some(num(tok, v)?);
                } else if let Some((a, b)) = tok.split_once('-') {
                    edges.push((num(tok, a)?, num(tok, b)?));
                } else {
                    return Err(bad(tok));
                }
            }
        }
        let n = n.ok_or_else(|| Error::Parse("missing n=".into()))?;
        let d = d.ok_or_else(|| Error::Parse("missing d=".into()))?;
        Self::new(n, d, edges)
    }
}

/// Shape `(nd − e, e)`: one height-2 column per edge (smaller endpoint on
/// top), then height-1 columns so every vertex occurs `d` times.
pub fn graph_filling(q: &MultiGraph) -> Filling {
    let order: Vec<usize> = (1..=q.n).collect();
    ordered_filling(q, &q.edges, &order)
}

fn ordered_filling(q: &MultiGraph, edges: &[(usize, usize)], singles: &[usize]) -> Filling {
    let mut top: Vec<usize> = edges.iter().map(|e| e.0).collect();
    let bottom: Vec<usize> = edges.iter().map(|e| e.1).collect();
    for &v in singles {
        top.extend(std::iter::repeat_n(v, q.d - q.degree(v)));
    }
    let rows = if bottom.is_empty() { vec![top] } else { vec![top, bottom] };
    let rows: Vec<Vec<usize>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    Filling::new(rows).expect("a graph filling is a valid diagram")
}

pub fn graph_tabloid(q: &MultiGraph) -> Result<DnTabloid> {
    DnTabloid::new(graph_filling(q), q.d)
}

/// The graph read off a filling with at most two rows: height-2 columns
/// are edges. `None` when the filling has a taller column or a loop.
pub fn graph_of(f: &Filling, d: usize) -> Result<Option<MultiGraph>> {
    let n = f.check_fibers(d)?;
    if f.shape().len() > 2 {
        return Ok(None);
    }
    let edges: Vec<(usize, usize)> = f.columns().into_iter().filter(|c| c.len() == 2).map(|c| (c[0], c[1])).collect();
    if edges.iter().any(|&(a, b)| a == b) {
        return Ok(None);
    }
    MultiGraph::new(n, d, edges).map(Some)
}

/// A graph filling of `q` arranged so the entries `1..=k` occupy a Young
/// diagram: edges inside `[k]` first, then edges leaving `[k]` (with the
/// `[k]` endpoint on top), then the rest.
pub fn split_graph_filling(q: &MultiGraph, k: usize) -> Result<Filling> {
    let class = |e: &(usize, usize)| (e.0 > k) as u8 + (e.1 > k) as u8;
    let mut edges = q.edges.clone();
    edges.sort_by_key(|e| (class(e), *e));
    let order: Vec<usize> = (1..=q.n).collect();
    let f = ordered_filling(q, &edges, &order);
    f.split_shape(k)?;
    Ok(f)
}

/// Membership of `[Q]` in the ideal of graphs `Q̃` on `[k]` with
/// `E(Q') ⊆ E(Q̃)` and `|E(Q̃)| ≤ |E(Q)|`.
#[derive(Clone, Debug, Serialize)]
pub struct SubgraphMembership {
    pub graph: MultiGraph,
    pub k: usize,
    pub sub_edges: Vec<(usize, usize)>,
    pub certificate: DnCertificate,
    pub certificate_verifies: bool,
    /// For each generator, its graph, or `None` when it realizes to zero.
    pub generator_graphs: Vec<Option<MultiGraph>>,
    pub generators_in_family: bool,
}

impl SubgraphMembership {
    pub fn holds(&self) -> bool {
        self.certificate_verifies && self.generators_in_family
    }
}

pub fn subgraph_membership(q: &MultiGraph, k: usize, sub_edges: &[(usize, usize)]) -> Result<SubgraphMembership> {
    if k == 0 || k > q.n {
        return Err(Error::Precondition(format!("cutoff {k} outside 1..={}", q.n)));
    }
    if sub_edges.iter().any(|&(a, b)| a > k || b > k) || !q.contains_edges(sub_edges) {
        return Err(Error::Precondition(format!("{sub_edges:?} is not a subgraph of {q} on 1..={k}")));
    }
    let f = split_graph_filling(q, k)?;
    let certificate = dn_membership_certificate(&f, q.d, k)?;
    let certificate_verifies = certificate.verify()?;
    let mut generator_graphs = Vec::new();
    let mut generators_in_family = true;
    for g in certificate.generators() {
        if realize_dn_tabloid(g, q.d)?.is_zero() {
            generator_graphs.push(None);
            continue;
        }
        let graph = graph_of(g, q.d)?;
        generators_in_family &= graph
            .as_ref()
            .is_some_and(|h| h.n == k && h.contains_edges(sub_edges) && h.edge_count() <= q.edge_count());
        generator_graphs.push(graph);
    }
    Ok(SubgraphMembership {
        graph: q.clone(),
        k,
        sub_edges: sub_edges.to_vec(),
        certificate,
        certificate_verifies,
        generator_graphs,
        generators_in_family,
    })
}

/// Shapes `λ ⊢ nd` with at least `k` parts; their covariants generate the
/// subspace-variety ideal.
pub fn subspace_shapes(n: usize, d: usize, k: usize) -> Vec<Partition> {
    Partition::all(n * d).filter(|p| p.len() >= k).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let q: MultiGraph = "n=4 d=3; 1-2 1-2 2-3 3-4 3-1".parse().unwrap();
        assert_eq!(q.to_string(), "n=4 d=3; 1-2 1-2 1-3 2-3 3-4");
        assert_eq!(q.edge_count(), 5);
        assert!(q.contains_triangle());
        assert!(q.is_rich());
        assert!(matches!("n=2 d=1; 1-2 1-2".parse::<MultiGraph>(), Err(Error::DegreeBound { vertex: 1, degree: 2, bound: 1 })));
        assert!("n=2 d=1; 1-1".parse::<MultiGraph>().is_err());
        assert!("d=1; 1-2".parse::<MultiGraph>().is_err());
    }

    #[test]
    fn fillings() {
        let q: MultiGraph = "n=4 d=3; 1-2 1-2 2-3 3-4 3-1".parse().unwrap();
        assert_eq!(graph_filling(&q).to_string(), "1,1,1,2,3,4,4/2,2,3,3,4");
        assert_eq!(graph_filling(&MultiGraph::edgeless(2, 2)).to_string(), "1,1,2,2");
        let p: MultiGraph = "n=3 d=2; 1-2 1-3".parse().unwrap();
        assert_eq!(split_graph_filling(&p, 2).unwrap().to_string(), "1,1,2,3/2,3");
        let back = graph_of(&graph_filling(&q), 3).unwrap().unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn one_edge_subgraph() {
        let q: MultiGraph = "n=3 d=2; 1-2 1-3".parse().unwrap();
        let m = subgraph_membership(&q, 2, &[(1, 2)]).unwrap();
        assert!(m.certificate_verifies);
        assert!(m.generators_in_family);
    }
}
