//! Undirected multigraphs, their cycle matroids, and the signed-incidence
//! representation over an arbitrary field.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::Matrix;
use crate::subset::{Ground, Label, Subset};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub label: Label,
    pub u: Label,
    pub v: Label,
}

/// A multigraph; parallel edges and loops are allowed. Each edge carries an
/// orientation `u -> v`, which only matters for the signed representation.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    vertices: Vec<Label>,
    edges: Vec<Edge>,
    ends: Vec<(usize, usize)>,
    ground: Ground,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<Label>,
    edges: Vec<Edge>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson { vertices: self.vertices.clone(), edges: self.edges.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GraphJson::deserialize(d)?;
        Graph::new(j.vertices, j.edges).map_err(serde::de::Error::custom)
    }
}

impl Graph {
    pub fn new(vertices: Vec<Label>, edges: Vec<Edge>) -> Result<Self> {
        let mut vindex = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vindex.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(v.to_string()));
            }
        }
        let mut ends = Vec::with_capacity(edges.len());
        for e in &edges {
            let a = *vindex.get(&e.u).ok_or_else(|| Error::UnknownLabel(e.u.to_string()))?;
            let b = *vindex.get(&e.v).ok_or_else(|| Error::UnknownLabel(e.v.to_string()))?;
            ends.push((a, b));
        }
        let ground = Ground::new(edges.iter().map(|e| e.label.clone()))?;
        Ok(Graph { vertices, edges, ends, ground })
    }

    /// Convenience constructor from `(label, u, v)` triples; vertices are
    /// collected in order of first appearance.
    pub fn from_edges<L, V>(edges: impl IntoIterator<Item = (L, V, V)>) -> Result<Self>
    where
        L: Into<Label>,
        V: Into<Label>,
    {
        let mut vertices: Vec<Label> = Vec::new();
        let mut es = Vec::new();
        for (l, u, v) in edges {
            let (u, v) = (u.into(), v.into());
            for x in [&u, &v] {
                if !vertices.contains(x) {
                    vertices.push(x.clone());
                }
            }
            es.push(Edge { label: l.into(), u, v });
        }
        Graph::new(vertices, es)
    }

    pub fn vertices(&self) -> &[Label] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    /// |V(X)| - components(X): the size of a spanning forest of the edges in X.
    pub fn rank(&self, x: Subset) -> u32 {
        let mut uf = UnionFind::new(self.vertices.len());
        x.iter().filter(|&e| uf.union(self.ends[e].0, self.ends[e].1)).count() as u32
    }

    /// The graph with edge `e` deleted and its endpoints identified.
    pub fn contract_edge(&self, e: &Label) -> Result<Graph> {
        let i = self.ground.index(e.clone())?;
        let (a, b) = (self.edges[i].u.clone(), self.edges[i].v.clone());
        let merge = |v: &Label| if *v == b { a.clone() } else { v.clone() };
        let vertices = self.vertices.iter().filter(|v| **v != b || a == b).cloned().collect();
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, ed)| Edge { label: ed.label.clone(), u: merge(&ed.u), v: merge(&ed.v) })
            .collect();
        Graph::new(vertices, edges)
    }

    /// Signed path-incidence matrix with rows indexed by the edges of a
    /// spanning forest `tree`. The column of an edge `u -> v` records, for
    /// each tree edge on the tree path from u to v, +1 when the path
    /// traverses it along its orientation and -1 against it. Restricted to
    /// the tree columns this is an identity. Without an explicit tree the
    /// forest is grown greedily in increasing label order.
    pub fn representation(&self, field: &Field, tree: Option<&[Label]>) -> Result<Matrix> {
        let tree_edges: Vec<usize> = match tree {
            Some(t) => {
                let mut uf = UnionFind::new(self.vertices.len());
                let mut out = Vec::new();
                for l in t {
                    let i = self.ground.index(l.clone())?;
                    if !uf.union(self.ends[i].0, self.ends[i].1) {
                        return Err(Error::NotAForest(l.to_string()));
                    }
                    out.push(i);
                }
                for (i, &(a, b)) in self.ends.iter().enumerate() {
                    if uf.find(a) != uf.find(b) {
                        return Err(Error::BadParams(format!(
                            "tree does not span the endpoints of edge {}",
                            self.edges[i].label
                        )));
                    }
                }
                out
            }
            None => {
                let mut order: Vec<usize> = (0..self.edges.len()).collect();
                order.sort_by(|&a, &b| self.edges[a].label.cmp(&self.edges[b].label));
                let mut uf = UnionFind::new(self.vertices.len());
                order.into_iter().filter(|&i| uf.union(self.ends[i].0, self.ends[i].1)).collect()
            }
        };

        let nv = self.vertices.len();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
        for &t in &tree_edges {
            let (a, b) = self.ends[t];
            adj[a].push((b, t));
            adj[b].push((a, t));
        }
        let row_of: HashMap<usize, usize> = tree_edges.iter().enumerate().map(|(r, &t)| (t, r)).collect();

        let mut m = Matrix::zeros(field, tree_edges.len(), self.edges.len());
        let minus_one = field.neg(1);
        for (col, &(u, v)) in self.ends.iter().enumerate() {
            if u == v {
                continue;
            }
            // BFS tree from u, then walk back from v
            let mut parent: Vec<Option<(usize, usize)>> = vec![None; nv];
            let mut seen = vec![false; nv];
            seen[u] = true;
            let mut q = VecDeque::from([u]);
            while let Some(a) = q.pop_front() {
                for &(b, t) in &adj[a] {
                    if !seen[b] {
                        seen[b] = true;
                        parent[b] = Some((a, t));
                        q.push_back(b);
                    }
                }
            }
            let mut cur = v;
            while cur != u {
                let (prev, t) = parent[cur].expect("tree spans every edge");
                let forward = self.ends[t] == (prev, cur);
                m.set(row_of[&t], col, if forward { 1 } else { minus_one });
                cur = prev;
            }
        }
        m.with_labels(self.ground.clone())
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in &self.vertices {
            s.push_str(&format!("  \"{v}\";\n"));
        }
        for e in &self.edges {
            s.push_str(&format!("  \"{}\" -- \"{}\" [label=\"{}\"];\n", e.u, e.v, e.label));
        }
        s.push_str("}\n");
        s
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already connected.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}
