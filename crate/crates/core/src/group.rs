//! Free products `F_d * G_{d+1} * ... * G_n` of a free group with finite
//! abelian groups, and their elements in reduced normal form.
//!
//! Positions are 1-based: positions `1..=d` are infinite cyclic with
//! generators `a_1, ..., a_d`, positions `d+1..=n` are finite abelian factors
//! whose elements are vectors reduced modulo the invariant factors.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite abelian group `Z/m_1 x ... x Z/m_k` in invariant-factor form
/// (`m_1 | m_2 | ... | m_k`, every `m_i >= 2`).
///
/// Requiring the divisibility chain makes list equality coincide with
/// isomorphism, which permutation automorphisms and per-factor exponents rely on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct FactorSpec {
    invariant_factors: Vec<u64>,
}

impl FactorSpec {
    /// Upper bound on the factor order, so that exhaustive enumeration of a
    /// factor stays cheap.
    pub const MAX_ORDER: u64 = 1 << 16;

    pub fn new(invariant_factors: Vec<u64>) -> Result<Self> {
        if invariant_factors.is_empty() {
            return Err(Error::InvalidFactor("empty invariant-factor list".into()));
        }
        if let Some(m) = invariant_factors.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidFactor(format!("invariant factor {m} < 2")));
        }
        for w in invariant_factors.windows(2) {
            if w[1] % w[0] != 0 {
                return Err(Error::InvalidFactor(format!(
                    "{:?} is not in invariant-factor form ({} does not divide {})",
                    invariant_factors, w[0], w[1]
                )));
            }
        }
        let order = invariant_factors
            .iter()
            .try_fold(1u64, |acc, &m| acc.checked_mul(m))
            .filter(|&o| o <= Self::MAX_ORDER);
        if order.is_none() {
            return Err(Error::InvalidFactor(format!(
                "order of {invariant_factors:?} exceeds {}",
                Self::MAX_ORDER
            )));
        }
        Ok(FactorSpec { invariant_factors })
    }

    /// The cyclic group `Z/m`.
    pub fn cyclic(m: u64) -> Result<Self> {
        Self::new(vec![m])
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    /// Number of canonical generators.
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    pub fn reduce(&self, v: &mut [i64]) {
        for (x, &m) in v.iter_mut().zip(&self.invariant_factors) {
            *x = x.rem_euclid(m as i64);
        }
    }

    pub fn is_zero(v: &[i64]) -> bool {
        v.iter().all(|&x| x == 0)
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut v: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        self.reduce(&mut v);
        v
    }

    pub fn scale(&self, a: &[i64], k: i64) -> Vec<i64> {
        let mut v: Vec<i64> = a.iter().map(|x| x * k.rem_euclid(self.exponent())).collect();
        self.reduce(&mut v);
        v
    }

    /// Exponent of the group (largest invariant factor).
    pub fn exponent(&self) -> i64 {
        *self.invariant_factors.last().unwrap() as i64
    }

    /// Canonical generator `e_k`.
    pub fn generator(&self, k: usize) -> Vec<i64> {
        let mut v = vec![0; self.rank()];
        v[k] = 1;
        v
    }

    /// All elements in lexicographic order, starting with zero.
    pub fn elements(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::with_capacity(self.order() as usize);
        let mut cur = vec![0i64; self.rank()];
        loop {
            out.push(cur.clone());
            let mut k = self.rank();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                cur[k] += 1;
                if cur[k] < self.invariant_factors[k] as i64 {
                    break;
                }
                cur[k] = 0;
            }
        }
    }

    pub fn nonzero_elements(&self) -> Vec<Vec<i64>> {
        self.elements().into_iter().skip(1).collect()
    }
}

impl TryFrom<Vec<u64>> for FactorSpec {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        FactorSpec::new(v)
    }
}

impl From<FactorSpec> for Vec<u64> {
    fn from(f: FactorSpec) -> Self {
        f.invariant_factors
    }
}

impl fmt::Display for FactorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.invariant_factors.iter().map(|m| format!("Z/{m}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// `G = F_d * G_{d+1} * ... * G_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub free_rank: usize,
    pub factors: Vec<FactorSpec>,
}

impl GroupSpec {
    pub fn new(free_rank: usize, factors: Vec<FactorSpec>) -> Self {
        GroupSpec { free_rank, factors }
    }

    /// Free group of rank `d`.
    pub fn free(d: usize) -> Self {
        GroupSpec::new(d, Vec::new())
    }

    /// Universal Coxeter group `W_n`, the free product of `n` copies of `Z/2`.
    pub fn coxeter(n: usize) -> Self {
        GroupSpec::new(0, vec![FactorSpec::cyclic(2).unwrap(); n])
    }

    /// Convenience constructor from cyclic orders.
    pub fn with_cyclic(free_rank: usize, orders: &[u64]) -> Result<Self> {
        let factors = orders.iter().map(|&m| FactorSpec::cyclic(m)).collect::<Result<_>>()?;
        Ok(GroupSpec::new(free_rank, factors))
    }

    /// Total number of positions.
    pub fn n(&self) -> usize {
        self.free_rank + self.factors.len()
    }

    pub fn positions(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n()
    }

    pub fn is_free_position(&self, pos: usize) -> bool {
        pos >= 1 && pos <= self.free_rank
    }

    /// The finite factor at `pos`, if `pos` is a finite position.
    pub fn factor(&self, pos: usize) -> Option<&FactorSpec> {
        if pos > self.free_rank {
            self.factors.get(pos - self.free_rank - 1)
        } else {
            None
        }
    }

    pub fn check_position(&self, pos: usize) -> Result<()> {
        if pos == 0 || pos > self.n() {
            Err(Error::InvalidPosition { position: pos, n: self.n() })
        } else {
            Ok(())
        }
    }

    /// `G_i ≅ G_j` (both infinite cyclic, or identical invariant factors).
    pub fn isomorphic_positions(&self, i: usize, j: usize) -> bool {
        match (self.is_free_position(i), self.is_free_position(j)) {
            (true, true) => true,
            (false, false) => self.factor(i) == self.factor(j),
            _ => false,
        }
    }

    /// True if this is `Z/2 * Z/2`, the group excluded from restriction injectivity.
    pub fn is_infinite_dihedral(&self) -> bool {
        *self == GroupSpec::coxeter(2)
    }

    // ---- construction of elements ----

    pub fn identity(&self) -> Word {
        Word::identity()
    }

    /// The free generator `a_i`.
    pub fn free_gen(&self, i: usize) -> Word {
        assert!(self.is_free_position(i), "position {i} is not free");
        Word(vec![Syllable::free(i, 1)])
    }

    /// The canonical generator `e_k` of the finite factor at `pos`.
    pub fn factor_gen(&self, pos: usize, k: usize) -> Word {
        let f = self.factor(pos).expect("finite position");
        Word(vec![Syllable::finite(pos, f.generator(k))])
    }

    /// A single-position element (identity if the payload is trivial).
    pub fn element(&self, pos: usize, payload: Payload) -> Result<Word> {
        self.normalize(vec![Syllable { position: pos, payload }])
    }

    /// All canonical generators in position order, as words.
    pub fn generators(&self) -> Vec<Word> {
        let mut out = Vec::new();
        for pos in self.positions() {
            match self.factor(pos) {
                None => out.push(self.free_gen(pos)),
                Some(f) => out.extend((0..f.rank()).map(|k| self.factor_gen(pos, k))),
            }
        }
        out
    }

    // ---- normal forms ----

    fn check_syllable(&self, s: &Syllable) -> Result<()> {
        self.check_position(s.position)?;
        match (&s.payload, self.factor(s.position)) {
            (Payload::Free(_), None) => Ok(()),
            (Payload::Finite(v), Some(f)) if v.len() == f.rank() => Ok(()),
            _ => Err(Error::PayloadMismatch(s.position)),
        }
    }

    /// Reduced normal form of a product of syllables: adjacent syllables at the
    /// same position are merged, identity syllables deleted, to fixpoint.
    pub fn normalize(&self, raw: impl IntoIterator<Item = Syllable>) -> Result<Word> {
        let raw: Vec<Syllable> = raw.into_iter().collect();
        for s in &raw {
            self.check_syllable(s)?;
        }
        Ok(self.reduce(raw))
    }

    /// Unchecked normalization; syllables must reference valid positions.
    pub(crate) fn reduce(&self, raw: impl IntoIterator<Item = Syllable>) -> Word {
        let mut stack: Vec<Syllable> = Vec::new();
        for mut s in raw {
            self.reduce_payload(&mut s);
            if s.is_trivial() {
                continue;
            }
            match stack.last_mut() {
                Some(top) if top.position == s.position => {
                    self.merge_into(top, &s);
                    if top.is_trivial() {
                        stack.pop();
                    }
                }
                _ => stack.push(s),
            }
        }
        Word(stack)
    }

    fn reduce_payload(&self, s: &mut Syllable) {
        if let (Payload::Finite(v), Some(f)) = (&mut s.payload, self.factor(s.position)) {
            f.reduce(v);
        }
    }

    fn merge_into(&self, top: &mut Syllable, s: &Syllable) {
        match (&mut top.payload, &s.payload) {
            (Payload::Free(a), Payload::Free(b)) => *a += b,
            (Payload::Finite(a), Payload::Finite(b)) => {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                self.factor(top.position).unwrap().reduce(a);
            }
            _ => unreachable!("payload kinds are fixed by position"),
        }
    }

    /// Checks that `w` is a reduced word over this group.
    pub fn validate_word(&self, w: &Word) -> Result<()> {
        for s in &w.0 {
            self.check_syllable(s)?;
            let mut c = s.clone();
            self.reduce_payload(&mut c);
            if c != *s || s.is_trivial() {
                return Err(Error::PayloadMismatch(s.position));
            }
        }
        if w.0.windows(2).any(|p| p[0].position == p[1].position) {
            return Err(Error::InvalidImages("word is not reduced".into()));
        }
        Ok(())
    }

    pub fn multiply(&self, u: &Word, v: &Word) -> Result<Word> {
        self.validate_word(u)?;
        self.validate_word(v)?;
        Ok(self.mul(u, v))
    }

    /// Product of two normal forms, without validating the inputs.
    pub fn mul(&self, u: &Word, v: &Word) -> Word {
        // Only the junction can cancel: both sides are already reduced.
        let mut left = u.0.clone();
        let mut right = v.0.iter();
        while let Some(s) = right.as_slice().first() {
            match left.last_mut() {
                Some(top) if top.position == s.position => {
                    self.merge_into(top, s);
                    right.next();
                    if top.is_trivial() {
                        left.pop();
                    } else {
                        break;
                    }
                }
                _ => break,
            }
        }
        left.extend(right.cloned());
        Word(left)
    }

    /// Product of several words.
    pub fn product<'a>(&self, ws: impl IntoIterator<Item = &'a Word>) -> Word {
        ws.into_iter().fold(Word::identity(), |acc, w| self.mul(&acc, w))
    }

    pub fn invert(&self, w: &Word) -> Word {
        Word(
            w.0.iter()
                .rev()
                .map(|s| {
                    let mut t = s.inverse();
                    self.reduce_payload(&mut t);
                    t
                })
                .collect(),
        )
    }

    pub fn pow(&self, w: &Word, k: i64) -> Word {
        let base = if k < 0 { self.invert(w) } else { w.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = self.mul(&out, &base);
        }
        out
    }

    /// `g w g^{-1}`.
    pub fn conjugate(&self, g: &Word, w: &Word) -> Word {
        self.mul(&self.mul(g, w), &self.invert(g))
    }

    /// `[u, v] = u v u^{-1} v^{-1}`.
    pub fn commutator(&self, u: &Word, v: &Word) -> Word {
        let uv = self.mul(u, v);
        let vu = self.mul(v, u);
        self.mul(&uv, &self.invert(&vu))
    }

    // ---- abelianization and the subgroups N ----

    pub fn abelianize(&self, w: &Word) -> AbelVector {
        let mut free = vec![0i64; self.free_rank];
        let mut factors: Vec<Vec<i64>> = self.factors.iter().map(|f| vec![0; f.rank()]).collect();
        for s in &w.0 {
            match &s.payload {
                Payload::Free(e) => free[s.position - 1] += e,
                Payload::Finite(v) => {
                    let slot = s.position - self.free_rank - 1;
                    let acc = &mut factors[slot];
                    for (x, y) in acc.iter_mut().zip(v) {
                        *x += y;
                    }
                    self.factors[slot].reduce(acc);
                }
            }
        }
        AbelVector { free, factors }
    }

    pub fn abel_add(&self, a: &AbelVector, b: &AbelVector) -> AbelVector {
        AbelVector {
            free: a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect(),
            factors: self
                .factors
                .iter()
                .zip(a.factors.iter().zip(&b.factors))
                .map(|(f, (x, y))| f.add(x, y))
                .collect(),
        }
    }

    /// Membership in `N`. Since `G' ⊆ N`, this only depends on the image in
    /// the abelianization: free coordinates must be divisible by `r`, and a
    /// factor coordinate modulo `m` must lie in `r Z/m = gcd(r, m) Z/m`.
    pub fn in_subgroup(&self, w: &Word, n: &SubgroupSpec) -> bool {
        let ab = self.abelianize(w);
        let free_ok = ab
            .free
            .iter()
            .enumerate()
            .all(|(i, &x)| x.rem_euclid(n.exponent(i + 1) as i64) == 0);
        free_ok
            && self.factors.iter().enumerate().all(|(slot, f)| {
                let r = n.exponent(self.free_rank + slot + 1);
                ab.factors[slot]
                    .iter()
                    .zip(f.invariant_factors())
                    .all(|(&x, &m)| x.rem_euclid(gcd(r, m) as i64) == 0)
            })
    }

    // ---- conjugacy ----

    /// Writes `w = conj · core · conj^{-1}` with `core` cyclically reduced.
    pub fn cyclic_reduce(&self, w: &Word) -> (Word, Word) {
        let mut core = w.0.clone();
        let mut conj: Vec<Syllable> = Vec::new();
        while core.len() >= 2 && core[0].position == core[core.len() - 1].position {
            let first = core.remove(0);
            let last = core.pop().unwrap();
            // conjugate by first^{-1}: first^{-1} (first ... last) first
            let merged = self.reduce(vec![last, first.clone()]);
            core.extend(merged.0);
            conj.push(first);
        }
        (self.reduce(conj), Word(core))
    }

    /// Some `g` with `g w1 g^{-1} = w2`, or `None` if the two are not conjugate.
    pub fn solve_conjugator(&self, w1: &Word, w2: &Word) -> Option<Word> {
        let (c1, k1) = self.cyclic_reduce(w1);
        let (c2, k2) = self.cyclic_reduce(w2);
        let c1_inv = self.invert(&c1);
        match (k1.len(), k2.len()) {
            (0, 0) => Some(self.mul(&c2, &c1_inv)),
            (1, 1) => (k1 == k2).then(|| self.mul(&c2, &c1_inv)),
            (a, b) if a >= 2 && a == b => {
                // k2 = q p where k1 = p q, so k2 = p^{-1} k1 p and g = c2 p^{-1} c1^{-1}.
                (0..a).find(|&s| k1.0[s..].iter().chain(&k1.0[..s]).eq(k2.0.iter())).map(|s| {
                    let p = Word(k1.0[..s].to_vec());
                    self.product([&c2, &self.invert(&p), &c1_inv])
                })
            }
            _ => None,
        }
    }

    // ---- enumeration and sampling ----

    /// Every syllable of position `pos` with the given free exponents (for free
    /// positions) or every nonzero element (for finite positions).
    pub fn syllables_at(&self, pos: usize, free_exponents: &[i64]) -> Vec<Syllable> {
        match self.factor(pos) {
            None => free_exponents.iter().filter(|&&e| e != 0).map(|&e| Syllable::free(pos, e)).collect(),
            Some(f) => f.nonzero_elements().into_iter().map(|v| Syllable::finite(pos, v)).collect(),
        }
    }

    /// All reduced words with at most `max_len` syllables, free exponents drawn
    /// from `free_exponents`. Ordered by length, then lexicographically.
    pub fn words_up_to(&self, max_len: usize, free_exponents: &[i64]) -> Vec<Word> {
        let per_pos: Vec<Vec<Syllable>> =
            self.positions().map(|p| self.syllables_at(p, free_exponents)).collect();
        let mut out = vec![Word::identity()];
        let mut frontier = vec![Word::identity()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                let last = w.0.last().map(|s| s.position);
                for (idx, syls) in per_pos.iter().enumerate() {
                    if Some(idx + 1) == last {
                        continue;
                    }
                    for s in syls {
                        let mut v = w.0.clone();
                        v.push(s.clone());
                        next.push(Word(v));
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// A uniformly-built random reduced word with exactly `len` syllables (when
    /// `n >= 2`), free exponents in `[-max_exp, max_exp] \ {0}`.
    pub fn random_word<R: Rng + ?Sized>(&self, rng: &mut R, len: usize, max_exp: i64) -> Word {
        let mut syls: Vec<Syllable> = Vec::with_capacity(len);
        while syls.len() < len {
            let pos = rng.gen_range(1..=self.n());
            if syls.last().map(|s| s.position) == Some(pos) {
                if self.n() == 1 {
                    break;
                }
                continue;
            }
            let s = match self.factor(pos) {
                None => {
                    let mut e = 0;
                    while e == 0 {
                        e = rng.gen_range(-max_exp..=max_exp);
                    }
                    Syllable::free(pos, e)
                }
                Some(f) => {
                    let elems = f.nonzero_elements();
                    Syllable::finite(pos, elems[rng.gen_range(0..elems.len())].clone())
                }
            };
            syls.push(s);
        }
        Word(syls)
    }
}

/// Payload of a syllable: an exponent of `a_i`, or a vector in a finite factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Payload {
    Free(i64),
    Finite(Vec<i64>),
}

impl Payload {
    pub fn is_trivial(&self) -> bool {
        match self {
            Payload::Free(e) => *e == 0,
            Payload::Finite(v) => FactorSpec::is_zero(v),
        }
    }

    /// Negation (not reduced).
    pub fn negate(&self) -> Payload {
        match self {
            Payload::Free(e) => Payload::Free(-e),
            Payload::Finite(v) => Payload::Finite(v.iter().map(|x| -x).collect()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, Payload)", into = "(usize, Payload)")]
pub struct Syllable {
    pub position: usize,
    pub payload: Payload,
}

impl Syllable {
    pub fn free(position: usize, exponent: i64) -> Self {
        Syllable { position, payload: Payload::Free(exponent) }
    }

    pub fn finite(position: usize, v: Vec<i64>) -> Self {
        Syllable { position, payload: Payload::Finite(v) }
    }

    pub fn is_trivial(&self) -> bool {
        self.payload.is_trivial()
    }

    fn inverse(&self) -> Syllable {
        Syllable { position: self.position, payload: self.payload.negate() }
    }
}

impl From<(usize, Payload)> for Syllable {
    fn from((position, payload): (usize, Payload)) -> Self {
        Syllable { position, payload }
    }
}

impl From<Syllable> for (usize, Payload) {
    fn from(s: Syllable) -> Self {
        (s.position, s.payload)
    }
}

/// A reduced word: adjacent syllables sit at distinct positions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub(crate) Vec<Syllable>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of syllables.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.0
    }

    /// Length counting `|e|` for each free syllable `a_i^e` and 1 for each
    /// finite syllable.
    pub fn letter_length(&self) -> u64 {
        self.0
            .iter()
            .map(|s| match &s.payload {
                Payload::Free(e) => e.unsigned_abs(),
                Payload::Finite(_) => 1,
            })
            .sum()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "·")?;
            }
            match &s.payload {
                Payload::Free(1) => write!(f, "a{}", s.position)?,
                Payload::Free(e) => write!(f, "a{}^{}", s.position, e)?,
                Payload::Finite(v) if v.len() == 1 => write!(f, "g{}^{}", s.position, v[0])?,
                Payload::Finite(v) => write!(f, "g{}{:?}", s.position, v)?,
            }
        }
        Ok(())
    }
}

/// Image in `G^{ab} = Z^d x G_{d+1} x ... x G_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelVector {
    pub free: Vec<i64>,
    pub factors: Vec<Vec<i64>>,
}

impl AbelVector {
    pub fn is_zero(&self) -> bool {
        self.free.iter().all(|&x| x == 0) && self.factors.iter().all(|v| FactorSpec::is_zero(v))
    }
}

/// The characteristic subgroup `N`.
///
/// `Uniform(r)` is `N = G'G^r`; `PerFactor([r_1, ..., r_n])` is
/// `N = G' G_1^{r_1} ... G_n^{r_n}` and requires `d = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubgroupSpec {
    Uniform(u64),
    PerFactor(Vec<u64>),
}

impl SubgroupSpec {
    /// Exponent `r_i` at a 1-based position.
    pub fn exponent(&self, pos: usize) -> u64 {
        match self {
            SubgroupSpec::Uniform(r) => *r,
            SubgroupSpec::PerFactor(rs) => rs[pos - 1],
        }
    }

    pub fn validate(&self, g: &GroupSpec) -> Result<()> {
        match self {
            SubgroupSpec::Uniform(r) => {
                if *r == 0 {
                    return Err(Error::InvalidSubgroup("exponent must be positive".into()));
                }
            }
            SubgroupSpec::PerFactor(rs) => {
                if g.free_rank > 0 {
                    return Err(Error::InvalidSubgroup(
                        "per-factor exponents require free rank 0".into(),
                    ));
                }
                if rs.len() != g.n() {
                    return Err(Error::InvalidSubgroup(format!(
                        "expected {} exponents, found {}",
                        g.n(),
                        rs.len()
                    )));
                }
                if rs.contains(&0) {
                    return Err(Error::InvalidSubgroup("exponents must be positive".into()));
                }
                for i in g.positions() {
                    for j in g.positions() {
                        if g.isomorphic_positions(i, j) && rs[i - 1] != rs[j - 1] {
                            return Err(Error::InvalidSubgroup(format!(
                                "isomorphic factors {i} and {j} need equal exponents"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The coprimality hypothesis `gcd(r_i, n-1) = 1` needed for the splitting.
    pub fn check_coprime(&self, g: &GroupSpec) -> Result<()> {
        self.validate(g)?;
        let k = g.n().saturating_sub(1) as u64;
        for pos in g.positions() {
            let r = self.exponent(pos);
            if gcd(r, k) != 1 {
                return Err(Error::NotCoprime { r, k });
            }
        }
        Ok(())
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
