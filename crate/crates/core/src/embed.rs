//! Planar embedding via the left-right planarity criterion (DFS orientation,
//! conflict-pair testing, then a second DFS that places back edges on the
//! side decided during testing).
//!
//! Every result is checked with [`euler_verify`] before it is returned.

use crate::connectivity::is_connected;
use crate::error::{Error, Result};
use crate::graph::{euler_verify, Embedding, Graph};

/// A planar rotation system for a connected graph.
///
/// Deterministic in the vertex numbering of `g`. Each rotation list is
/// rotated so that it starts at its smallest neighbour.
pub fn embed_planar(g: &Graph) -> Result<Embedding> {
    if !is_connected(g) {
        return Err(Error::NotConnected);
    }
    if g.n() > 2 && g.m() > 3 * g.n() - 6 {
        return Err(Error::NotPlanar);
    }
    let rotation = LeftRight::new(g).run().ok_or(Error::NotPlanar)?;
    let rotation = rotation
        .into_iter()
        .map(|mut r| {
            if let Some(min_at) = (0..r.len()).min_by_key(|&i| r[i]) {
                r.rotate_left(min_at);
            }
            r
        })
        .collect();
    let rho = Embedding::for_graph(g, rotation)?;
    assert!(
        euler_verify(g, &rho),
        "left-right planarity produced a non-planar rotation system"
    );
    Ok(rho)
}

/// `true` iff the connected graph `g` has a planar embedding.
pub fn is_planar(g: &Graph) -> Result<bool> {
    match embed_planar(g) {
        Ok(_) => Ok(true),
        Err(Error::NotPlanar) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Reflection of an embedding: every rotation reversed.
pub fn mirror(rho: &Embedding) -> Embedding {
    rho.mirror()
}

type EdgeId = usize;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Interval {
    low: Option<EdgeId>,
    high: Option<EdgeId>,
}

impl Interval {
    fn new(low: EdgeId, high: EdgeId) -> Self {
        Self {
            low: Some(low),
            high: Some(high),
        }
    }

    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

/// Cyclic neighbour list under construction, with a marked first element.
#[derive(Debug, Clone, Default)]
struct Ring {
    order: Vec<usize>,
    first: Option<usize>,
}

impl Ring {
    fn index(&self, w: usize) -> usize {
        self.order
            .iter()
            .position(|&x| x == w)
            .expect("reference in ring")
    }

    fn insert_cw(&mut self, w: usize, reference: Option<usize>) {
        match reference {
            None => {
                self.order.push(w);
                self.first.get_or_insert(w);
            }
            Some(r) => {
                let at = self.index(r) + 1;
                self.order.insert(at, w);
            }
        }
    }

    fn insert_ccw(&mut self, w: usize, reference: Option<usize>) {
        match reference {
            None => {
                self.order.push(w);
                self.first.get_or_insert(w);
            }
            Some(r) => {
                let at = self.index(r);
                self.order.insert(at, w);
                if self.first == Some(r) {
                    self.first = Some(w);
                }
            }
        }
    }

    fn insert_first(&mut self, w: usize) {
        if self.order.is_empty() {
            self.order.push(w);
            self.first = Some(w);
        } else {
            self.insert_ccw(w, self.first);
        }
    }
}

struct LeftRight<'g> {
    g: &'g Graph,
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<EdgeId>>,
    roots: Vec<usize>,
    // per undirected edge index: orientation once assigned
    tail: Vec<usize>,
    head: Vec<usize>,
    oriented: Vec<bool>,
    out: Vec<Vec<EdgeId>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    reference: Vec<Option<EdgeId>>,
    side: Vec<i64>,
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<Option<EdgeId>>,
    left_ref: Vec<Option<usize>>,
    right_ref: Vec<Option<usize>>,
    rings: Vec<Ring>,
}

impl<'g> LeftRight<'g> {
    fn new(g: &'g Graph) -> Self {
        let (n, m) = (g.n(), g.m());
        Self {
            g,
            height: vec![None; n],
            parent_edge: vec![None; n],
            roots: Vec::new(),
            tail: vec![0; m],
            head: vec![0; m],
            oriented: vec![false; m],
            out: vec![Vec::new(); n],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting_depth: vec![0; m],
            reference: vec![None; m],
            side: vec![1; m],
            stack: Vec::new(),
            stack_bottom: vec![0; m],
            lowpt_edge: vec![None; m],
            left_ref: vec![None; n],
            right_ref: vec![None; n],
            rings: vec![Ring::default(); n],
        }
    }

    fn run(mut self) -> Option<Vec<Vec<usize>>> {
        for v in 0..self.g.n() {
            if self.height[v].is_none() {
                self.height[v] = Some(0);
                self.roots.push(v);
                self.orient(v);
            }
        }

        let mut ordered = self.ordered_out();
        for &root in &self.roots.clone() {
            if !self.test(root, &ordered) {
                return None;
            }
        }

        for e in 0..self.g.m() {
            self.nesting_depth[e] *= self.sign(e);
        }
        ordered = self.ordered_out();
        for (v, out) in ordered.iter().enumerate() {
            let mut prev = None;
            for &e in out {
                let w = self.head[e];
                self.rings[v].insert_cw(w, prev);
                prev = Some(w);
            }
        }
        for &root in &self.roots.clone() {
            self.place(root, &ordered);
        }
        Some(self.rings.into_iter().map(|r| r.order).collect())
    }

    fn ordered_out(&self) -> Vec<Vec<EdgeId>> {
        self.out
            .iter()
            .map(|edges| {
                let mut e = edges.clone();
                e.sort_by_key(|&x| self.nesting_depth[x]);
                e
            })
            .collect()
    }

    fn height_of(&self, v: usize) -> usize {
        self.height[v].expect("visited vertex")
    }

    fn orient(&mut self, v: usize) {
        let parent = self.parent_edge[v];
        let hv = self.height_of(v);
        for i in 0..self.g.degree(v) {
            let w = self.g.neighbors(v)[i];
            let e = self.g.edge_index(v, w).expect("edge of graph");
            if self.oriented[e] {
                continue;
            }
            self.oriented[e] = true;
            self.tail[e] = v;
            self.head[e] = w;
            self.out[v].push(e);
            self.lowpt[e] = hv;
            self.lowpt2[e] = hv;
            match self.height[w] {
                None => {
                    self.parent_edge[w] = Some(e);
                    self.height[w] = Some(hv + 1);
                    self.orient(w);
                }
                Some(hw) => self.lowpt[e] = hw,
            }

            self.nesting_depth[e] = 2 * self.lowpt[e] as i64;
            if self.lowpt2[e] < hv {
                // chordal
                self.nesting_depth[e] += 1;
            }

            if let Some(pe) = parent {
                if self.lowpt[e] < self.lowpt[pe] {
                    self.lowpt2[pe] = self.lowpt[pe].min(self.lowpt2[e]);
                    self.lowpt[pe] = self.lowpt[e];
                } else if self.lowpt[e] > self.lowpt[pe] {
                    self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt[e]);
                } else {
                    self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt2[e]);
                }
            }
        }
    }

    fn conflicting(&self, iv: &Interval, b: EdgeId) -> bool {
        match iv.high {
            Some(h) => self.lowpt[h] > self.lowpt[b],
            None => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => unreachable!("empty conflict pair on stack"),
        }
    }

    fn test(&mut self, v: usize, ordered: &[Vec<EdgeId>]) -> bool {
        let parent = self.parent_edge[v];
        let hv = self.height_of(v);
        for (i, &ei) in ordered[v].iter().enumerate() {
            let w = self.head[ei];
            self.stack_bottom[ei] = self.stack.len();
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w, ordered) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = Some(ei);
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval::new(ei, ei),
                });
            }

            if self.lowpt[ei] < hv {
                let pe = parent.expect("return edge below the root");
                if i == 0 {
                    self.lowpt_edge[pe] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, pe) {
                    return false;
                }
            }
        }
        if let Some(pe) = parent {
            self.remove_back_edges(pe);
        }
        true
    }

    fn add_constraints(&mut self, ei: EdgeId, e: EdgeId) -> bool {
        let mut p = ConflictPair::default();
        loop {
            let mut q = self.stack.pop().expect("return edges on stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let q_low = q.right.low.expect("non-empty right interval");
            if self.lowpt[q_low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else if let Some(l) = p.right.low {
                    self.reference[l] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[q_low] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }

        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("non-empty stack");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(l) = p.right.low {
                self.reference[l] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(l) = p.left.low {
                self.reference[l] = q.left.high;
            }
            p.left.low = q.left.low;
        }

        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: EdgeId) {
        let u = self.tail[e];
        let hu = self.height_of(u);
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            let p = self.stack.pop().expect("non-empty stack");
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }

        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.head[h] != u {
                    break;
                }
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.reference[l] = p.right.low;
                    self.side[l] = -1;
                    p.left.low = None;
                }
            }

            while let Some(h) = p.right.high {
                if self.head[h] != u {
                    break;
                }
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    self.reference[r] = p.left.low;
                    self.side[r] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }

        if self.lowpt[e] < hu {
            let top = self.stack.last().expect("return edge of e on stack");
            let (hl, hr) = (top.left.high, top.right.high);
            self.reference[e] = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                _ => hr,
            };
        }
    }

    /// Resolves the final side of `e` by folding the reference chain.
    fn sign(&mut self, e: EdgeId) -> i64 {
        let mut chain = Vec::new();
        let mut cur = e;
        while let Some(r) = self.reference[cur] {
            chain.push(cur);
            cur = r;
        }
        let mut s = self.side[cur];
        for &x in chain.iter().rev() {
            self.side[x] *= s;
            self.reference[x] = None;
            s = self.side[x];
        }
        self.side[e]
    }

    fn place(&mut self, v: usize, ordered: &[Vec<EdgeId>]) {
        for &ei in &ordered[v] {
            let w = self.head[ei];
            if self.parent_edge[w] == Some(ei) {
                self.rings[w].insert_first(v);
                self.left_ref[v] = Some(w);
                self.right_ref[v] = Some(w);
                self.place(w, ordered);
            } else if self.side[ei] == 1 {
                let r = self.right_ref[w];
                self.rings[w].insert_cw(v, r);
            } else {
                let l = self.left_ref[w];
                self.rings[w].insert_ccw(v, l);
                self.left_ref[w] = Some(v);
            }
        }
    }
}
