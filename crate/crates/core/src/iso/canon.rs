//! Canonical labeling of a vertex-colored bipartite graph by
//! individualization–refinement, with automorphism and invariant pruning.

use std::cmp::Ordering;
use std::collections::VecDeque;

/// Point/block incidence graph. Vertices `0..nv` are points, the rest are
/// distinct blocks.
pub(crate) struct Graph {
    pub n: usize,
    pub nv: usize,
    pub adj: Vec<Vec<usize>>,
    /// Initial color of each vertex; cells are ordered by color.
    pub color: Vec<u64>,
    /// Multiplicity of each block vertex (1 for points).
    pub mult: Vec<u32>,
}

#[derive(Clone, Copy)]
struct Trace(u64);

impl Trace {
    fn new() -> Self {
        Trace(0xcbf2_9ce4_8422_2325)
    }

    fn mix(&mut self, x: u64) {
        for byte in x.to_le_bytes() {
            self.0 ^= byte as u64;
            self.0 = self.0.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
}

#[derive(Clone)]
struct Partition {
    lab: Vec<usize>,
    /// Start index of the cell containing each vertex.
    cell: Vec<usize>,
    /// `end[s]` is the exclusive end of the cell starting at `s`.
    end: Vec<usize>,
    ncells: usize,
}

impl Partition {
    fn initial(g: &Graph) -> (Self, Vec<usize>) {
        let mut lab: Vec<usize> = (0..g.n).collect();
        lab.sort_by_key(|&v| (g.color[v], v));
        let mut cell = vec![0; g.n];
        let mut end = vec![0; g.n];
        let mut starts = Vec::new();
        let mut s = 0;
        while s < g.n {
            let mut e = s + 1;
            while e < g.n && g.color[lab[e]] == g.color[lab[s]] {
                e += 1;
            }
            for &v in &lab[s..e] {
                cell[v] = s;
            }
            end[s] = e;
            starts.push(s);
            s = e;
        }
        let ncells = starts.len();
        (
            Partition {
                lab,
                cell,
                end,
                ncells,
            },
            starts,
        )
    }

    fn is_discrete(&self) -> bool {
        self.ncells == self.lab.len()
    }

    /// First smallest non-singleton cell.
    fn target(&self) -> usize {
        let mut best = (usize::MAX, 0);
        let mut s = 0;
        while s < self.lab.len() {
            let len = self.end[s] - s;
            if len > 1 && len < best.0 {
                best = (len, s);
            }
            s = self.end[s];
        }
        best.1
    }

    fn refine(&mut self, g: &Graph, queue: Vec<usize>, tr: &mut Trace) {
        let n = self.lab.len();
        let mut in_queue = vec![false; n];
        for &s in &queue {
            in_queue[s] = true;
        }
        let mut queue: VecDeque<usize> = queue.into();
        let mut count = vec![0u32; n];
        let mut touched: Vec<usize> = Vec::new();
        let mut cells: Vec<usize> = Vec::new();
        while let Some(w) = queue.pop_front() {
            in_queue[w] = false;
            let wend = self.end[w];
            for i in w..wend {
                for &y in &g.adj[self.lab[i]] {
                    if count[y] == 0 {
                        touched.push(y);
                    }
                    count[y] += 1;
                }
            }
            cells.clear();
            cells.extend(touched.iter().map(|&y| self.cell[y]));
            cells.sort_unstable();
            cells.dedup();
            for &c in &cells {
                let e = self.end[c];
                if e - c == 1 {
                    continue;
                }
                let seg = &mut self.lab[c..e];
                seg.sort_unstable_by_key(|&v| (count[v], v));
                if count[seg[0]] == count[seg[e - c - 1]] {
                    continue;
                }
                tr.mix(w as u64);
                tr.mix(c as u64);
                let mut pieces = Vec::new();
                let mut s = c;
                while s < e {
                    let k = count[self.lab[s]];
                    let mut t = s + 1;
                    while t < e && count[self.lab[t]] == k {
                        t += 1;
                    }
                    for i in s..t {
                        self.cell[self.lab[i]] = s;
                    }
                    self.end[s] = t;
                    tr.mix(k as u64);
                    tr.mix((t - s) as u64);
                    pieces.push(s);
                    s = t;
                }
                self.ncells += pieces.len() - 1;
                if in_queue[c] {
                    for &s in &pieces[1..] {
                        in_queue[s] = true;
                        queue.push_back(s);
                    }
                } else {
                    let largest = *pieces
                        .iter()
                        .max_by_key(|&&s| (self.end[s] - s, usize::MAX - s))
                        .unwrap();
                    for &s in &pieces {
                        if s != largest {
                            in_queue[s] = true;
                            queue.push_back(s);
                        }
                    }
                }
            }
            for &y in &touched {
                count[y] = 0;
            }
            touched.clear();
        }
        tr.mix(self.ncells as u64);
    }

    fn individualize(&mut self, g: &Graph, v: usize, tr: &mut Trace) {
        let c = self.cell[v];
        let e = self.end[c];
        let i = self.lab[c..e].iter().position(|&x| x == v).unwrap() + c;
        self.lab.swap(c, i);
        self.end[c] = c + 1;
        self.end[c + 1] = e;
        for k in c + 1..e {
            self.cell[self.lab[k]] = c + 1;
        }
        self.ncells += 1;
        tr.mix(c as u64);
        self.refine(g, vec![c], tr);
    }
}

struct Leaf {
    path: Vec<usize>,
    invs: Vec<u64>,
    cert: Vec<u32>,
    lab: Vec<usize>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Result of the search: the canonical labeling (`lab[i]` is the vertex that
/// receives label `i`) and generators of the automorphism group.
pub(crate) struct Canon {
    pub lab: Vec<usize>,
    pub generators: Vec<Vec<usize>>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    gens: Vec<Vec<usize>>,
    path: Vec<usize>,
    invs: Vec<u64>,
}

fn divergence(a: &[usize], b: &[usize]) -> usize {
    a.iter()
        .zip(b)
        .position(|(x, y)| x != y)
        .unwrap_or(a.len().min(b.len()))
}

impl Search<'_> {
    fn cert(&self, p: &Partition) -> Vec<u32> {
        let mut label = vec![0u32; self.g.n];
        for (i, &v) in p.lab.iter().enumerate() {
            label[v] = i as u32;
        }
        let mut out = Vec::new();
        for &x in &p.lab[self.g.nv..] {
            let mut pts: Vec<u32> = self.g.adj[x].iter().map(|&y| label[y]).collect();
            pts.sort_unstable();
            out.push(self.g.mult[x]);
            out.push(pts.len() as u32);
            out.extend(pts);
        }
        out
    }

    fn automorphism(&mut self, from: &[usize], to: &[usize]) {
        let mut gamma = vec![0; self.g.n];
        for (&a, &b) in from.iter().zip(to) {
            gamma[a] = b;
        }
        self.gens.push(gamma);
    }

    fn leaf(&mut self, p: &Partition, eq_first: bool, state: Ordering) -> Option<usize> {
        let cert = self.cert(p);
        let make = |s: &Self| Leaf {
            path: s.path.clone(),
            invs: s.invs.clone(),
            cert: cert.clone(),
            lab: p.lab.clone(),
        };
        let Some(first) = &self.first else {
            self.first = Some(make(self));
            self.best = Some(make(self));
            return None;
        };
        if eq_first && cert == first.cert {
            let (flab, fpath) = (first.lab.clone(), first.path.clone());
            self.automorphism(&flab, &p.lab);
            return Some(divergence(&self.path, &fpath));
        }
        let best = self.best.as_ref().unwrap();
        let ord = match state {
            Ordering::Equal => cert.cmp(&best.cert),
            s => s,
        };
        match ord {
            Ordering::Equal => {
                let (blab, bpath) = (best.lab.clone(), best.path.clone());
                self.automorphism(&blab, &p.lab);
                Some(divergence(&self.path, &bpath))
            }
            Ordering::Greater => {
                self.best = Some(make(self));
                None
            }
            Ordering::Less => None,
        }
    }

    fn node(&mut self, p: Partition, eq_first: bool, state: Ordering) -> Option<usize> {
        if p.is_discrete() {
            return self.leaf(&p, eq_first, state);
        }
        let level = self.path.len();
        let t = p.target();
        let mut children: Vec<usize> = p.lab[t..p.end[t]].to_vec();
        children.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        let mut orbits: Option<(usize, UnionFind)> = None;
        for v in children {
            if !explored.is_empty() {
                if orbits.as_ref().is_none_or(|(k, _)| *k != self.gens.len()) {
                    let mut uf = UnionFind::new(self.g.n);
                    for gamma in &self.gens {
                        if self.path.iter().all(|&x| gamma[x] == x) {
                            for (x, &y) in gamma.iter().enumerate() {
                                uf.union(x, y);
                            }
                        }
                    }
                    orbits = Some((self.gens.len(), uf));
                }
                let uf = &mut orbits.as_mut().unwrap().1;
                let rv = uf.find(v);
                if explored.iter().any(|&u| uf.find(u) == rv) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = p.clone();
            let mut tr = Trace::new();
            child.individualize(self.g, v, &mut tr);
            let inv = tr.0;
            let ef = eq_first
                && self
                    .first
                    .as_ref()
                    .is_none_or(|f| f.invs.get(level) == Some(&inv));
            let st = match (state, &self.best) {
                (Ordering::Equal, Some(b)) => match b.invs.get(level) {
                    Some(bi) => inv.cmp(bi),
                    None => Ordering::Less,
                },
                (s, _) => s,
            };
            if self.first.is_some() && !ef && st == Ordering::Less {
                continue;
            }
            self.path.push(v);
            self.invs.push(inv);
            let jump = self.node(child, ef, st);
            self.path.pop();
            self.invs.pop();
            if let Some(j) = jump {
                if j < level {
                    return Some(j);
                }
            }
        }
        None
    }
}

pub(crate) fn canonize(g: &Graph) -> Canon {
    let (mut p, starts) = Partition::initial(g);
    let mut tr = Trace::new();
    p.refine(g, starts, &mut tr);
    let mut s = Search {
        g,
        first: None,
        best: None,
        gens: Vec::new(),
        path: Vec::new(),
        invs: Vec::new(),
    };
    s.node(p, true, Ordering::Equal);
    Canon {
        lab: s.best.unwrap().lab,
        generators: s.gens,
    }
}
