//! Labeled point configurations, typicality, and the adjacency graph.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{coconic6, cyclic_order_on_line, join, meet, orient3, HomPoint, ProjLine};
use crate::linalg::mat_vec3;
use crate::scalar::Scalar;

/// An ordered tuple of 5, 6 or 7 pairwise distinct projective points; the
/// label of a point is its index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration<T> {
    points: Vec<HomPoint<T>>,
}

impl<T: Scalar> Configuration<T> {
    pub fn new(points: Vec<HomPoint<T>>) -> Result<Self> {
        if !(5..=7).contains(&points.len()) {
            return Err(Error::WrongSize { expected: "5, 6 or 7", got: points.len() });
        }
        for (i, j) in (0..points.len()).tuple_combinations() {
            if points[i] == points[j] {
                return Err(Error::DuplicatePoint(i, j));
            }
        }
        Ok(Configuration { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[HomPoint<T>] {
        &self.points
    }

    pub fn point(&self, label: usize) -> &HomPoint<T> {
        &self.points[label]
    }

    /// The configuration without `label`; remaining points keep their order,
    /// so labels above `label` shift down by one.
    pub fn without(&self, label: usize) -> Configuration<T> {
        let points = self
            .points
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != label)
            .map(|(_, p)| p.clone())
            .collect();
        Configuration { points }
    }

    /// New configuration whose label `k` carries the old point `perm[k]`.
    pub fn relabel(&self, perm: &[usize]) -> Configuration<T> {
        assert_eq!(perm.len(), self.len());
        Configuration { points: perm.iter().map(|&i| self.points[i].clone()).collect() }
    }

    /// Applies the projective map `v ↦ M v` to every point.
    pub fn transform(&self, m: &[[T; 3]; 3]) -> Result<Configuration<T>> {
        let points = self
            .points
            .iter()
            .map(|p| HomPoint::new(mat_vec3(m, p.coords())))
            .collect::<Result<Vec<_>>>()
            .map_err(|_| Error::DegenerateInput("singular transformation".into()))?;
        Configuration::new(points)
    }

    pub fn collinear_triples(&self) -> Vec<[usize; 3]> {
        (0..self.len())
            .tuple_combinations()
            .filter(|&(a, b, c)| orient3(&self.points[a], &self.points[b], &self.points[c]).is_zero())
            .map(|(a, b, c)| [a, b, c])
            .collect()
    }

    pub fn is_simple(&self) -> bool {
        self.collinear_triples().is_empty()
    }

    pub fn require_simple(&self) -> Result<()> {
        let bad = self.collinear_triples();
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Error::NotSimple(bad))
        }
    }

    pub fn is_typical(&self) -> bool {
        check_typicality(self).typical
    }

    pub fn require_typical(&self) -> Result<()> {
        let report = check_typicality(self);
        if report.typical {
            Ok(())
        } else {
            Err(Error::NotTypical(Box::new(report)))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypicalityReport {
    pub simple: bool,
    pub typical: bool,
    pub collinear_triples: Vec<[usize; 3]>,
    pub coconic_sextuples: Vec<[usize; 6]>,
}

/// Runs every orientation test and, for `n ≥ 6`, every coconic test. Both
/// kinds of violations are reported even when the configuration is not simple.
pub fn check_typicality<T: Scalar>(c: &Configuration<T>) -> TypicalityReport {
    let collinear_triples = c.collinear_triples();
    let coconic_sextuples: Vec<[usize; 6]> = (0..c.len())
        .combinations(6)
        .filter(|s| {
            let ps = [0, 1, 2, 3, 4, 5].map(|k| c.point(s[k]));
            coconic6(ps).is_zero()
        })
        .map(|s| [s[0], s[1], s[2], s[3], s[4], s[5]])
        .collect();
    let simple = collinear_triples.is_empty();
    TypicalityReport {
        simple,
        typical: simple && coconic_sextuples.is_empty(),
        collinear_triples,
        coconic_sextuples,
    }
}

/// Undirected graph on the point labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AdjacencyGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl AdjacencyGraph {
    pub fn from_edges(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        AdjacencyGraph { n, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let e = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&e).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut root_of: Vec<Option<usize>> = vec![None; self.n];
        for v in 0..self.n {
            let r = find(&mut parent, v);
            match root_of[r] {
                Some(k) => comps[k].push(v),
                None => {
                    root_of[r] = Some(comps.len());
                    comps.push(vec![v]);
                }
            }
        }
        comps
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Vertex order along the graph when it is a single cycle through every
    /// vertex, starting at 0 towards the smaller neighbor.
    pub fn hamiltonian_cycle(&self) -> Option<Vec<usize>> {
        if self.edges.len() != self.n || (0..self.n).any(|v| self.degree(v) != 2) {
            return None;
        }
        let mut order = vec![0usize];
        let mut prev = usize::MAX;
        let mut cur = 0usize;
        loop {
            let nb = self.neighbors(cur);
            let next = if prev == usize::MAX { *nb.iter().min().unwrap() } else { *nb.iter().find(|&&x| x != prev).unwrap() };
            if next == 0 {
                break;
            }
            order.push(next);
            prev = cur;
            cur = next;
        }
        (order.len() == self.n).then_some(order)
    }
}

/// Adjacency graph of a simple configuration: `{p, q}` is an edge when one of
/// the two arcs of the line `pq` bounded by `p` and `q` meets none of the
/// lines through two of the remaining points.
pub fn adjacency_graph<T: Scalar>(c: &Configuration<T>) -> Result<AdjacencyGraph> {
    c.require_simple()?;
    let n = c.len();
    let mut lines: Vec<Vec<Option<ProjLine<T>>>> = vec![vec![None; n]; n];
    for (a, b) in (0..n).tuple_combinations() {
        lines[a][b] = Some(join(c.point(a), c.point(b))?);
    }
    let mut edges = Vec::new();
    for (p, q) in (0..n).tuple_combinations() {
        let l = lines[p][q].as_ref().unwrap();
        let mut on_line = vec![c.point(p).clone(), c.point(q).clone()];
        for (a, b) in (0..n).filter(|&x| x != p && x != q).tuple_combinations() {
            let x = meet(l, lines[a][b].as_ref().unwrap())?;
            if !on_line.contains(&x) {
                on_line.push(x);
            }
        }
        let order = cyclic_order_on_line(l, &on_line)?;
        let pos1 = order.iter().position(|&i| i == 1).unwrap();
        // p has label 0 and sits first in the canonical cycle
        if pos1 == 1 || pos1 == order.len() - 1 {
            edges.push((p, q));
        }
    }
    Ok(AdjacencyGraph::from_edges(n, edges))
}

/// Orientation signs of all triples of a configuration.
///
/// The line `ab` meets the line `pq` in `χ(a,b,q)·p − χ(a,b,p)·q`, so the
/// arc test of [`adjacency_graph`] only needs these signs: the crossing lies on
/// the arc of `pq` where both coefficients agree in sign exactly when
/// `χ(a,b,p)·χ(a,b,q) < 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chirotope {
    n: usize,
    signs: Vec<i8>,
}

impl Chirotope {
    pub fn new<T: Scalar>(c: &Configuration<T>) -> Self {
        let n = c.len();
        let mut signs = vec![0i8; n * n * n];
        for (i, j, k) in (0..n).tuple_combinations() {
            let s = orient3(c.point(i), c.point(j), c.point(k)).as_i8();
            for ([a, b, d], parity) in [
                ([i, j, k], 1),
                ([j, k, i], 1),
                ([k, i, j], 1),
                ([j, i, k], -1),
                ([i, k, j], -1),
                ([k, j, i], -1),
            ] {
                signs[(a * n + b) * n + d] = s * parity;
            }
        }
        Chirotope { n, signs }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn sign(&self, i: usize, j: usize, k: usize) -> i8 {
        self.signs[(i * self.n + j) * self.n + k]
    }

    pub fn is_simple(&self) -> bool {
        (0..self.n).tuple_combinations().all(|(i, j, k)| self.sign(i, j, k) != 0)
    }

    /// Adjacency graph of the sub-configuration formed by `labels`, with
    /// vertices numbered by position in `labels`. Assumes simplicity.
    pub fn adjacency_graph(&self, labels: &[usize]) -> AdjacencyGraph {
        let m = labels.len();
        let mut edges = Vec::new();
        for (p, q) in (0..m).tuple_combinations() {
            let (lp, lq) = (labels[p], labels[q]);
            let mut arcs = (0..m)
                .filter(|&x| x != p && x != q)
                .tuple_combinations()
                .map(|(a, b)| self.sign(labels[a], labels[b], lp) * self.sign(labels[a], labels[b], lq));
            let first = arcs.next();
            if first.is_none_or(|f| arcs.all(|s| s == f)) {
                edges.push((p, q));
            }
        }
        AdjacencyGraph::from_edges(m, edges)
    }
}
