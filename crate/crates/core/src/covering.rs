//! The finite quotient `Q = G/N`, the covering graph `N\A` of the Bass-Serre
//! tree, its deck action, and a free basis of `N` with Schreier rewriting.
//!
//! The base graph is a star: one hub vertex with trivial stabilizer, one loop
//! per free generator, and one spoke per finite factor ending at a vertex
//! stabilized by that factor. Its cover has
//!
//! - hub vertices indexed by `Q`, in lexicographic order;
//! - factor-`i` vertices indexed by `Q / im(G_i)`, represented by the coset
//!   element whose `i`-coordinates vanish;
//! - one edge `(q, b)` per `q ∈ Q` and base edge `b`, ordered by `q` first.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freegroup::FreeWord;
use crate::group::{gcd, GroupSpec, Payload, SubgroupSpec, Syllable, Word};

/// `Q = G/N` as a product of cyclic components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientGroup {
    pub moduli: Vec<u64>,
    /// First component of each position (0-based by position - 1).
    offsets: Vec<usize>,
    widths: Vec<usize>,
}

impl QuotientGroup {
    pub fn new(g: &GroupSpec, n: &SubgroupSpec) -> Result<Self> {
        n.validate(g)?;
        let mut moduli = Vec::new();
        let mut offsets = Vec::new();
        let mut widths = Vec::new();
        for pos in g.positions() {
            let r = n.exponent(pos);
            offsets.push(moduli.len());
            match g.factor(pos) {
                None => moduli.push(r),
                Some(f) => moduli.extend(f.invariant_factors().iter().map(|&m| gcd(r, m))),
            }
            widths.push(moduli.len() - offsets[pos - 1]);
        }
        Ok(QuotientGroup { moduli, offsets, widths })
    }

    pub fn order(&self) -> u64 {
        self.moduli.iter().product()
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.moduli.len()]
    }

    pub fn reduce(&self, q: &mut [i64]) {
        for (x, &m) in q.iter_mut().zip(&self.moduli) {
            *x = x.rem_euclid(m as i64);
        }
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut v: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        self.reduce(&mut v);
        v
    }

    pub fn neg(&self, a: &[i64]) -> Vec<i64> {
        let mut v: Vec<i64> = a.iter().map(|x| -x).collect();
        self.reduce(&mut v);
        v
    }

    pub fn sub(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        self.add(a, &self.neg(b))
    }

    /// Component range of a position.
    pub fn components(&self, pos: usize) -> std::ops::Range<usize> {
        self.offsets[pos - 1]..self.offsets[pos - 1] + self.widths[pos - 1]
    }

    /// Lexicographic rank of an element.
    pub fn index(&self, q: &[i64]) -> usize {
        q.iter().zip(&self.moduli).fold(0usize, |acc, (&x, &m)| acc * m as usize + x as usize)
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> Vec<Vec<i64>> {
        let total = self.order() as usize;
        (0..total)
            .map(|mut idx| {
                let mut q = vec![0i64; self.moduli.len()];
                for c in (0..q.len()).rev() {
                    let m = self.moduli[c] as usize;
                    q[c] = (idx % m) as i64;
                    idx /= m;
                }
                q
            })
            .collect()
    }

    /// Image of a syllable.
    pub fn project_syllable(&self, s: &Syllable) -> Vec<i64> {
        let mut q = self.zero();
        let r = self.components(s.position);
        match &s.payload {
            Payload::Free(e) => q[r.start] = *e,
            Payload::Finite(v) => q[r].copy_from_slice(v),
        }
        self.reduce(&mut q);
        q
    }

    /// The projection `G → Q`.
    pub fn project(&self, w: &Word) -> Vec<i64> {
        w.syllables().iter().fold(self.zero(), |acc, s| self.add(&acc, &self.project_syllable(s)))
    }

    /// Order of the image of the factor at `pos`.
    pub fn image_order(&self, pos: usize) -> u64 {
        self.moduli[self.components(pos)].iter().product()
    }

    /// Coset representative of `q` modulo the image of `G_pos`.
    pub fn coset_rep(&self, pos: usize, q: &[i64]) -> Vec<i64> {
        let mut v = q.to_vec();
        for c in self.components(pos) {
            v[c] = 0;
        }
        v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexKind {
    Hub,
    Factor(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub kind: VertexKind,
    pub q: Vec<i64>,
    /// Stabilizer `r_i G_i` when non-trivial.
    pub label: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    /// Position of the base edge: a loop for free positions, a spoke otherwise.
    pub position: usize,
    pub q: Vec<i64>,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverGraph {
    pub group: GroupSpec,
    pub subgroup: SubgroupSpec,
    pub quotient: QuotientGroup,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    factor_offsets: Vec<usize>,
}

/// A permutation of vertices and edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeckPermutation {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl DeckPermutation {
    /// `self ∘ other`.
    pub fn compose(&self, other: &DeckPermutation) -> DeckPermutation {
        DeckPermutation {
            vertices: other.vertices.iter().map(|&v| self.vertices[v]).collect(),
            edges: other.edges.iter().map(|&e| self.edges[e]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.vertices.iter().enumerate().all(|(i, &v)| i == v) && self.edges.iter().enumerate().all(|(i, &e)| i == e)
    }
}

/// Label of `r G` for a finite factor, or `None` when it is trivial.
fn stabilizer_label(g: &GroupSpec, n: &SubgroupSpec, pos: usize) -> Option<String> {
    let f = g.factor(pos)?;
    let r = n.exponent(pos);
    let parts: Vec<String> = f
        .invariant_factors()
        .iter()
        .filter(|&&m| gcd(r, m) != m)
        .map(|&m| format!("{}Z/{m}", gcd(r, m)))
        .collect();
    (!parts.is_empty()).then(|| parts.join(" x "))
}

/// Builds `N\A`.
pub fn build_cover(g: &GroupSpec, n: &SubgroupSpec) -> Result<CoverGraph> {
    let quotient = QuotientGroup::new(g, n)?;
    let elems = quotient.elements();
    let mut vertices: Vec<Vertex> =
        elems.iter().map(|q| Vertex { kind: VertexKind::Hub, q: q.clone(), label: None }).collect();
    let mut factor_offsets = vec![0; g.n()];
    for pos in g.positions().filter(|&p| !g.is_free_position(p)) {
        factor_offsets[pos - 1] = vertices.len();
        let label = stabilizer_label(g, n, pos);
        for q in elems.iter().filter(|q| quotient.coset_rep(pos, q) == **q) {
            vertices.push(Vertex { kind: VertexKind::Factor(pos), q: q.clone(), label: label.clone() });
        }
    }
    let mut cover = CoverGraph {
        group: g.clone(),
        subgroup: n.clone(),
        quotient,
        vertices,
        edges: Vec::new(),
        factor_offsets,
    };
    let mut edges = Vec::with_capacity(elems.len() * g.n());
    for q in &elems {
        for pos in g.positions() {
            let source = cover.hub_index(q);
            let target = if g.is_free_position(pos) {
                let step = cover.quotient.project_syllable(&Syllable::free(pos, 1));
                cover.hub_index(&cover.quotient.add(q, &step))
            } else {
                cover.factor_vertex(pos, q)
            };
            edges.push(Edge { position: pos, q: q.clone(), source, target });
        }
    }
    cover.edges = edges;
    Ok(cover)
}

impl CoverGraph {
    pub fn hub_index(&self, q: &[i64]) -> usize {
        self.quotient.index(q)
    }

    /// The factor-`pos` vertex adjacent to hub `q`.
    pub fn factor_vertex(&self, pos: usize, q: &[i64]) -> usize {
        let rep = self.quotient.coset_rep(pos, q);
        let comps = self.quotient.components(pos);
        // lexicographic rank over the remaining components
        let mut idx = 0usize;
        for (c, (&x, &m)) in rep.iter().zip(&self.quotient.moduli).enumerate() {
            if !comps.contains(&c) {
                idx = idx * m as usize + x as usize;
            }
        }
        self.factor_offsets[pos - 1] + idx
    }

    pub fn edge_index(&self, q: &[i64], pos: usize) -> usize {
        self.hub_index(q) * self.group.n() + (pos - 1)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(_, u) in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Incident edges of each vertex in edge order, with the other endpoint.
    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (k, e) in self.edges.iter().enumerate() {
            adj[e.source].push((k, e.target));
            if e.source != e.target {
                adj[e.target].push((k, e.source));
            }
        }
        for a in &mut adj {
            a.sort();
        }
        adj
    }

    /// True when `N` acts freely: `r_i G_i = 0` for every finite factor.
    pub fn is_free(&self) -> bool {
        self.vertices.iter().all(|v| v.label.is_none())
    }

    /// `|E| - |V| + 1`, defined for free covers only.
    pub fn rank(&self) -> Result<usize> {
        if !self.is_free() {
            return Err(Error::NonFreeCover);
        }
        Ok(self.euler_rank() as usize)
    }

    fn euler_rank(&self) -> i64 {
        self.edges.len() as i64 - self.vertices.len() as i64 + 1
    }

    /// Rank zero and at most one vertex with a non-trivial stabilizer.
    pub fn is_contractible(&self) -> bool {
        self.euler_rank() == 0 && self.vertices.iter().filter(|v| v.label.is_some()).count() <= 1
    }

    /// The deck transformation induced by `q ∈ Q`.
    pub fn deck_action(&self, q: &[i64]) -> DeckPermutation {
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                let moved = self.quotient.add(&v.q, q);
                match v.kind {
                    VertexKind::Hub => self.hub_index(&moved),
                    VertexKind::Factor(pos) => self.factor_vertex(pos, &moved),
                }
            })
            .collect();
        let edges = self.edges.iter().map(|e| self.edge_index(&self.quotient.add(&e.q, q), e.position)).collect();
        DeckPermutation { vertices, edges }
    }

    /// The element of `G_pos` whose image in `Q` is the `pos`-part of `x`.
    /// Exact on free covers, where `G_pos` injects into `Q`.
    fn factor_lift(&self, pos: usize, x: &[i64]) -> Word {
        let v: Vec<i64> = x[self.quotient.components(pos)].to_vec();
        self.group.reduce(vec![Syllable::finite(pos, v)])
    }

    fn vertex_name(&self, v: usize) -> String {
        let vx = &self.vertices[v];
        let coords: Vec<String> = vx.q.iter().map(|x| x.to_string()).collect();
        match vx.kind {
            VertexKind::Hub => format!("h({})", coords.join(",")),
            VertexKind::Factor(p) => format!("f{p}({})", coords.join(",")),
        }
    }

    fn edge_letter(&self, e: &Edge) -> String {
        if self.group.is_free_position(e.position) {
            format!("a{}", e.position)
        } else {
            format!("g{}", e.position)
        }
    }

    /// DOT rendering; tree edges solid and the others dashed when a basis is given.
    pub fn to_dot(&self, basis: Option<&FreeBasis>) -> String {
        let mut s = String::from("graph cover {\n");
        for (k, v) in self.vertices.iter().enumerate() {
            let name = self.vertex_name(k);
            match (&v.kind, &v.label) {
                (VertexKind::Hub, _) => writeln!(s, "  \"{name}\" [shape=point];").unwrap(),
                (_, Some(l)) => writeln!(s, "  \"{name}\" [shape=circle,label=\"{l}\"];").unwrap(),
                _ => writeln!(s, "  \"{name}\" [shape=circle,label=\"\"];").unwrap(),
            }
        }
        for (k, e) in self.edges.iter().enumerate() {
            let style = match basis {
                Some(b) if !b.tree[k] => "dashed",
                _ => "solid",
            };
            writeln!(
                s,
                "  \"{}\" -- \"{}\" [label=\"{}\",style={style}];",
                self.vertex_name(e.source),
                self.vertex_name(e.target),
                self.edge_letter(e)
            )
            .unwrap();
        }
        s.push_str("}\n");
        s
    }
}

/// A breadth-first spanning tree and the Schreier basis of `N` it induces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeBasis {
    pub cover: CoverGraph,
    /// `tree[e]` marks spanning-tree edges.
    pub tree: Vec<bool>,
    /// Tree-path word from the base hub to each vertex.
    pub paths: Vec<Word>,
    /// Hub through which the tree enters each factor vertex.
    pub entry: Vec<Option<usize>>,
    /// Signed basis letter read when crossing each edge from source to target.
    pub edge_letters: Vec<i64>,
    pub words: Vec<Word>,
}

/// Spanning tree and Schreier generators of a free cover.
pub fn free_basis(cover: &CoverGraph) -> Result<FreeBasis> {
    if !cover.is_free() {
        return Err(Error::NonFreeCover);
    }
    let g = &cover.group;
    let adj = cover.adjacency();
    let nv = cover.vertices.len();
    let mut paths: Vec<Option<Word>> = vec![None; nv];
    let mut entry: Vec<Option<usize>> = vec![None; nv];
    let mut tree = vec![false; cover.edges.len()];
    paths[0] = Some(Word::identity());
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for &(k, v) in &adj[u] {
            if paths[v].is_some() {
                continue;
            }
            let e = &cover.edges[k];
            let pu = paths[u].clone().unwrap();
            let pv = match cover.vertices[v].kind {
                VertexKind::Factor(_) => {
                    entry[v] = Some(u);
                    pu
                }
                VertexKind::Hub => match cover.vertices[u].kind {
                    VertexKind::Hub => {
                        let a = g.free_gen(e.position);
                        let step = if e.source == u { a } else { g.invert(&a) };
                        g.mul(&pu, &step)
                    }
                    VertexKind::Factor(pos) => {
                        let q0 = &cover.vertices[entry[u].unwrap()].q;
                        let diff = cover.quotient.sub(&cover.vertices[v].q, q0);
                        g.mul(&pu, &cover.factor_lift(pos, &diff))
                    }
                },
            };
            tree[k] = true;
            paths[v] = Some(pv);
            queue.push_back(v);
        }
    }
    let paths: Vec<Word> = paths.into_iter().map(|p| p.expect("cover is connected")).collect();

    let mut edge_letters = vec![0i64; cover.edges.len()];
    let mut words = Vec::new();
    for (k, e) in cover.edges.iter().enumerate() {
        if tree[k] {
            continue;
        }
        let (s, t) = (e.source, e.target);
        let (word, sign) = if g.is_free_position(e.position) {
            let w = g.product([&paths[s], &g.free_gen(e.position), &g.invert(&paths[t])]);
            if s > t {
                (g.invert(&w), -1)
            } else {
                (w, 1)
            }
        } else {
            let q0 = entry[t].unwrap();
            let diff = cover.quotient.sub(&cover.vertices[q0].q, &e.q);
            (g.product([&paths[s], &cover.factor_lift(e.position, &diff), &g.invert(&paths[q0])]), 1)
        };
        words.push(word);
        edge_letters[k] = sign * words.len() as i64;
    }
    debug_assert_eq!(words.len() as i64, cover.euler_rank());
    Ok(FreeBasis { cover: cover.clone(), tree, paths, entry, edge_letters, words })
}

impl FreeBasis {
    pub fn rank(&self) -> usize {
        self.words.len()
    }

    fn cross(&self, out: &mut Vec<i64>, edge: usize, forward: bool) {
        let l = self.edge_letters[edge];
        if l != 0 {
            out.push(if forward { l } else { -l });
        }
    }

    /// Expresses `w ∈ N` in the basis by lifting it to a path from the base hub.
    pub fn rewrite(&self, w: &Word) -> Result<FreeWord> {
        let c = &self.cover;
        let g = &c.group;
        g.validate_word(w)?;
        if !g.in_subgroup(w, &c.subgroup) {
            return Err(Error::NotInSubgroup);
        }
        let mut q = c.quotient.zero();
        let mut out = Vec::new();
        for s in w.syllables() {
            match &s.payload {
                Payload::Free(e) => {
                    let step = c.quotient.project_syllable(&Syllable::free(s.position, 1));
                    for _ in 0..e.unsigned_abs() {
                        if *e > 0 {
                            self.cross(&mut out, c.edge_index(&q, s.position), true);
                            q = c.quotient.add(&q, &step);
                        } else {
                            q = c.quotient.sub(&q, &step);
                            self.cross(&mut out, c.edge_index(&q, s.position), false);
                        }
                    }
                }
                Payload::Finite(_) => {
                    self.cross(&mut out, c.edge_index(&q, s.position), true);
                    q = c.quotient.add(&q, &c.quotient.project_syllable(s));
                    self.cross(&mut out, c.edge_index(&q, s.position), false);
                }
            }
        }
        debug_assert!(q.iter().all(|&x| x == 0));
        Ok(FreeWord::reduce(out))
    }

    /// The element of `N` named by a word in the basis.
    pub fn evaluate(&self, fw: &FreeWord) -> Word {
        let g = &self.cover.group;
        let parts: Vec<Word> = fw
            .letters()
            .iter()
            .map(|&x| {
                let b = &self.words[x.unsigned_abs() as usize - 1];
                if x > 0 {
                    b.clone()
                } else {
                    g.invert(b)
                }
            })
            .collect();
        g.product(&parts)
    }
}

/// JSON summary of a cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSummary {
    pub quotient_order: u64,
    pub vertices: usize,
    pub edges: usize,
    pub free: bool,
    pub contractible: bool,
    pub rank: Option<usize>,
    pub basis: Option<Vec<Word>>,
    pub vertex_labels: Vec<String>,
    pub note: Option<String>,
}

pub fn summarize_cover(cover: &CoverGraph) -> CoverSummary {
    let basis = free_basis(cover).ok();
    let mut labels: Vec<String> = cover.vertices.iter().filter_map(|v| v.label.clone()).collect();
    labels.dedup();
    CoverSummary {
        quotient_order: cover.quotient.order(),
        vertices: cover.num_vertices(),
        edges: cover.num_edges(),
        free: cover.is_free(),
        contractible: cover.is_contractible(),
        rank: cover.rank().ok(),
        basis: basis.map(|b| b.words),
        vertex_labels: labels,
        note: (!cover.is_free()).then(|| "non-free cover".to_string()),
    }
}

pub fn is_free_cover(g: &GroupSpec, n: &SubgroupSpec) -> Result<bool> {
    Ok(build_cover(g, n)?.is_free())
}

pub fn is_contractible_cover(g: &GroupSpec, n: &SubgroupSpec) -> Result<bool> {
    Ok(build_cover(g, n)?.is_contractible())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn u(r: u64) -> SubgroupSpec {
        SubgroupSpec::Uniform(r)
    }

    #[test]
    fn quotient_orders() {
        assert_eq!(QuotientGroup::new(&GroupSpec::coxeter(2), &u(2)).unwrap().order(), 4);
        assert_eq!(QuotientGroup::new(&GroupSpec::coxeter(4), &u(2)).unwrap().order(), 16);
        assert_eq!(QuotientGroup::new(&GroupSpec::free(2), &u(3)).unwrap().order(), 9);
        assert_eq!(QuotientGroup::new(&GroupSpec::with_cyclic(0, &[4, 6]).unwrap(), &u(2)).unwrap().order(), 4);
    }

    #[test]
    fn cover_sizes() {
        let c = build_cover(&GroupSpec::coxeter(2), &u(2)).unwrap();
        assert_eq!((c.num_vertices(), c.num_edges()), (8, 8));
        assert_eq!(c.rank().unwrap(), 1);
        // every vertex has degree 2: a subdivided 4-cycle
        let adj = c.adjacency();
        assert!(adj.iter().all(|a| a.len() == 2));

        let c = build_cover(&GroupSpec::coxeter(3), &u(2)).unwrap();
        assert_eq!((c.num_vertices(), c.num_edges(), c.rank().unwrap()), (20, 24, 5));

        let c = build_cover(&GroupSpec::with_cyclic(1, &[3]).unwrap(), &u(3)).unwrap();
        assert_eq!((c.num_vertices(), c.num_edges(), c.rank().unwrap()), (12, 18, 7));
    }

    #[test]
    fn vertex_and_edge_counts_match_formula() {
        for (g, n) in [
            (GroupSpec::coxeter(3), u(2)),
            (GroupSpec::with_cyclic(1, &[3, 4]).unwrap(), u(2)),
            (GroupSpec::with_cyclic(0, &[4, 4]).unwrap(), u(2)),
            (GroupSpec::with_cyclic(0, &[2, 3, 5]).unwrap(), SubgroupSpec::PerFactor(vec![2, 3, 5])),
        ] {
            let c = build_cover(&g, &n).unwrap();
            let q = c.quotient.order() as usize;
            let v: usize = q + g
                .positions()
                .filter(|&p| !g.is_free_position(p))
                .map(|p| q / c.quotient.image_order(p) as usize)
                .sum::<usize>();
            assert_eq!(c.num_vertices(), v);
            assert_eq!(c.num_edges(), g.n() * q);
            assert!(c.is_connected());
        }
    }

    #[test]
    fn freeness() {
        assert!(is_free_cover(&GroupSpec::coxeter(5), &u(2)).unwrap());
        assert!(!is_free_cover(&GroupSpec::with_cyclic(0, &[4, 4]).unwrap(), &u(2)).unwrap());
        assert!(is_free_cover(&GroupSpec::free(3), &u(7)).unwrap());
        let c = build_cover(&GroupSpec::with_cyclic(0, &[4, 4]).unwrap(), &u(2)).unwrap();
        assert_eq!(c.rank(), Err(Error::NonFreeCover));
        assert_eq!(summarize_cover(&c).vertex_labels, vec!["2Z/4".to_string()]);
        assert!(free_basis(&c).is_err());
    }

    #[test]
    fn contractibility() {
        assert!(!is_contractible_cover(&GroupSpec::coxeter(2), &u(2)).unwrap());
        assert!(is_contractible_cover(&GroupSpec::with_cyclic(0, &[2]).unwrap(), &u(2)).unwrap());
        assert!(is_contractible_cover(&GroupSpec::with_cyclic(0, &[4]).unwrap(), &u(2)).unwrap());
        assert!(!is_contractible_cover(&GroupSpec::coxeter(3), &u(2)).unwrap());
        // r = 1: N = G, the cover is the base star
        assert!(!is_contractible_cover(&GroupSpec::coxeter(2), &u(1)).unwrap());
    }

    #[test]
    fn ranks_of_free_groups() {
        for (n, r, m) in [(2, 3, 10), (2, 5, 26), (3, 3, 55)] {
            assert_eq!(build_cover(&GroupSpec::free(n), &u(r)).unwrap().rank().unwrap(), m);
        }
    }

    #[test]
    fn w2_basis_is_a_power_of_ab() {
        let g = GroupSpec::coxeter(2);
        let b = free_basis(&build_cover(&g, &u(2)).unwrap()).unwrap();
        assert_eq!(b.rank(), 1);
        let ab = g.mul(&g.factor_gen(1, 0), &g.factor_gen(2, 0));
        let ab2 = g.pow(&ab, 2);
        let w = &b.words[0];
        assert!(g.solve_conjugator(w, &ab2).is_some() || g.solve_conjugator(w, &g.invert(&ab2)).is_some());
        let fw = b.rewrite(&ab2).unwrap();
        assert_eq!(fw.len(), 1);
        assert_eq!(b.evaluate(&fw), ab2);
    }

    #[test]
    fn basis_words_rewrite_to_letters() {
        for (g, r) in [(GroupSpec::coxeter(4), 2), (GroupSpec::with_cyclic(1, &[3]).unwrap(), 3), (GroupSpec::free(2), 3)] {
            let b = free_basis(&build_cover(&g, &u(r)).unwrap()).unwrap();
            assert_eq!(b.rank(), b.cover.rank().unwrap());
            assert!(b.rewrite(&Word::identity()).unwrap().is_identity());
            for (k, w) in b.words.iter().enumerate() {
                assert!(g.in_subgroup(w, &u(r)));
                assert_eq!(b.rewrite(w).unwrap(), FreeWord::letter(k as i64 + 1));
            }
        }
    }

    #[test]
    fn rewrite_round_trip_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for (g, r) in [(GroupSpec::coxeter(4), 2), (GroupSpec::with_cyclic(1, &[3]).unwrap(), 3)] {
            let b = free_basis(&build_cover(&g, &u(r)).unwrap()).unwrap();
            let mut hits = 0;
            while hits < 200 {
                let len = rng.gen_range(0..=8);
                let w = g.random_word(&mut rng, len, 3);
                if !g.in_subgroup(&w, &u(r)) {
                    assert_eq!(b.rewrite(&w), Err(Error::NotInSubgroup));
                    continue;
                }
                hits += 1;
                assert_eq!(b.evaluate(&b.rewrite(&w).unwrap()), w);
            }
        }
    }

    #[test]
    fn deck_action_laws() {
        let c = build_cover(&GroupSpec::coxeter(4), &u(2)).unwrap();
        let elems = c.quotient.elements();
        assert!(c.deck_action(&c.quotient.zero()).is_identity());
        for a in &elems {
            for b in &elems {
                let lhs = c.deck_action(&c.quotient.add(a, b));
                assert_eq!(lhs, c.deck_action(a).compose(&c.deck_action(b)));
            }
            let p = c.deck_action(a);
            for (k, e) in c.edges.iter().enumerate() {
                let f = &c.edges[p.edges[k]];
                assert_eq!((f.source, f.target), (p.vertices[e.source], p.vertices[e.target]));
            }
        }
        let orbit: std::collections::BTreeSet<usize> = elems.iter().map(|q| c.deck_action(q).vertices[0]).collect();
        assert_eq!(orbit.len(), elems.len());
    }

    #[test]
    fn w2_generators_act_as_reflections() {
        let g = GroupSpec::coxeter(2);
        let c = build_cover(&g, &u(2)).unwrap();
        for pos in [1, 2] {
            let q = c.quotient.project(&g.factor_gen(pos, 0));
            let p = c.deck_action(&q);
            assert!(p.compose(&p).is_identity());
            let fixed = p.vertices.iter().enumerate().filter(|(i, v)| i == *v).count();
            assert_eq!(fixed, 2);
        }
    }

    #[test]
    fn dot_output_marks_tree_edges() {
        let c = build_cover(&GroupSpec::coxeter(2), &u(2)).unwrap();
        let b = free_basis(&c).unwrap();
        let dot = c.to_dot(Some(&b));
        assert!(dot.starts_with("graph cover {"));
        assert_eq!(dot.matches("dashed").count(), 1);
        assert_eq!(dot.matches("solid").count(), 7);
    }
}
