//! Directed graphs and gammoid rank via vertex-disjoint path counting.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::{Ground, Label, Subset};

#[derive(Debug, Clone, PartialEq)]
pub struct Digraph {
    vertices: Vec<Label>,
    index: HashMap<Label, usize>,
    arcs: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct DigraphJson {
    vertices: Vec<Label>,
    arcs: Vec<(Label, Label)>,
}

impl Serialize for Digraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DigraphJson { vertices: self.vertices.clone(), arcs: self.arc_labels() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Digraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = DigraphJson::deserialize(d)?;
        Digraph::new(j.vertices, j.arcs).map_err(serde::de::Error::custom)
    }
}

impl Digraph {
    /// Duplicate arcs are dropped; arc order is otherwise preserved, which
    /// fixes the augmenting-path search order.
    pub fn new<V, A>(vertices: impl IntoIterator<Item = V>, arcs: impl IntoIterator<Item = (A, A)>) -> Result<Self>
    where
        V: Into<Label>,
        A: Into<Label>,
    {
        let vertices: Vec<Label> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(v.to_string()));
            }
        }
        let mut out: Vec<(usize, usize)> = Vec::new();
        for (a, b) in arcs {
            let (a, b) = (a.into(), b.into());
            let ia = *index.get(&a).ok_or_else(|| Error::UnknownLabel(a.to_string()))?;
            let ib = *index.get(&b).ok_or_else(|| Error::UnknownLabel(b.to_string()))?;
            if !out.contains(&(ia, ib)) {
                out.push((ia, ib));
            }
        }
        Ok(Digraph { vertices, index, arcs: out })
    }

    pub fn vertices(&self) -> &[Label] {
        &self.vertices
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc_labels(&self) -> Vec<(Label, Label)> {
        self.arcs.iter().map(|&(a, b)| (self.vertices[a].clone(), self.vertices[b].clone())).collect()
    }

    pub fn index_of(&self, v: &Label) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// DOT rendering. `layers` optionally groups vertices into ranks.
    pub fn to_dot(&self, layers: &[Vec<Label>]) -> String {
        let mut s = String::from("digraph G {\n  rankdir=BT;\n");
        for layer in layers {
            let names: Vec<String> = layer.iter().map(|v| format!("\"{v}\"")).collect();
            s.push_str(&format!("  {{ rank=same; {}; }}\n", names.join("; ")));
        }
        for (a, b) in self.arc_labels() {
            s.push_str(&format!("  \"{a}\" -> \"{b}\";\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// A digraph with a source set E (the ground set) and a sink set T.
#[derive(Debug, Clone, PartialEq)]
pub struct Gammoid {
    digraph: Digraph,
    sources: Vec<usize>,
    sinks: Vec<usize>,
    ground: Ground,
}

impl Gammoid {
    pub fn new(digraph: Digraph, sources: &[Label], sinks: &[Label]) -> Result<Self> {
        let look = |v: &Label| digraph.index_of(v).ok_or_else(|| Error::UnknownLabel(v.to_string()));
        let src = sources.iter().map(look).collect::<Result<Vec<_>>>()?;
        let snk = sinks.iter().map(look).collect::<Result<Vec<_>>>()?;
        let ground = Ground::new(sources.iter().cloned())?;
        Ok(Gammoid { digraph, sources: src, sinks: snk, ground })
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn sinks(&self) -> Vec<Label> {
        self.sinks.iter().map(|&i| self.digraph.vertices[i].clone()).collect()
    }

    /// Maximum number of vertex-disjoint paths from `x` to T. A source that
    /// is itself a sink contributes a zero-length path.
    pub fn rank(&self, x: Subset) -> u32 {
        let nv = self.digraph.vertices.len();
        // vertex v splits into in = 2v and out = 2v+1; s and t are the last two
        let (s, t) = (2 * nv, 2 * nv + 1);
        let mut net = Flow::new(2 * nv + 2);
        for v in 0..nv {
            net.add(2 * v, 2 * v + 1);
        }
        for &(a, b) in &self.digraph.arcs {
            net.add(2 * a + 1, 2 * b);
        }
        for i in x.iter() {
            net.add(s, 2 * self.sources[i]);
        }
        for &k in &self.sinks {
            net.add(2 * k + 1, t);
        }
        net.max_flow(s, t)
    }
}

/// Unit-capacity max-flow by BFS augmenting paths.
struct Flow {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u8>,
}

impl Flow {
    fn new(n: usize) -> Self {
        Flow { head: vec![Vec::new(); n], to: Vec::new(), cap: Vec::new() }
    }

    fn add(&mut self, a: usize, b: usize) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(1);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    fn max_flow(&mut self, s: usize, t: usize) -> u32 {
        let n = self.head.len();
        let mut flow = 0;
        loop {
            let mut via: Vec<Option<usize>> = vec![None; n];
            let mut seen = vec![false; n];
            seen[s] = true;
            let mut q = VecDeque::from([s]);
            'bfs: while let Some(a) = q.pop_front() {
                for &e in &self.head[a] {
                    let b = self.to[e];
                    if self.cap[e] > 0 && !seen[b] {
                        seen[b] = true;
                        via[b] = Some(e);
                        if b == t {
                            break 'bfs;
                        }
                        q.push_back(b);
                    }
                }
            }
            if !seen[t] {
                return flow;
            }
            let mut v = t;
            while let Some(e) = via[v] {
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                v = self.to[e ^ 1];
            }
            flow += 1;
        }
    }
}
