//! Generators of `Aut(G)`, words in them, evaluation and inner-automorphism
//! detection.
//!
//! Composition is function composition: in an [`AutWord`] the rightmost letter
//! is applied first, so `[s, t]` denotes `s ∘ t`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{FactorSpec, GroupSpec, Payload, SubgroupSpec, Syllable, Word};

/// A standard generator of `Aut(G)`.
///
/// `gamma` payloads are single-syllable elements of position `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GenAut {
    /// Automorphism of the finite factor at `position`; column `k` of
    /// `matrix` is the image of the canonical generator `e_k`.
    FactorAut { position: usize, matrix: Vec<Vec<i64>> },
    /// `ω_ij`, swapping two isomorphic factors through the canonical
    /// coordinate identification.
    Permutation { i: usize, j: usize },
    /// `α_ij^(γ)`: `g_j ↦ γ^{-1} g_j γ` for `g_j ∈ G_j`, `j > d`.
    DehnTwist { i: usize, j: usize, gamma: Payload },
    /// `ρ_ij^(γ)`: `a_j ↦ a_j γ`, `j ≤ d`.
    RightTransvection { i: usize, j: usize, gamma: Payload },
    /// `λ_ij^(γ)`: `a_j ↦ γ a_j`, `j ≤ d`.
    LeftTransvection { i: usize, j: usize, gamma: Payload },
    /// `τ_i`: `a_i ↦ a_i^{-1}`.
    Reflection { i: usize },
    /// `ad(c)`: `x ↦ c x c^{-1}`.
    Inner { conjugator: Word },
}

impl GenAut {
    pub fn dehn_twist(i: usize, j: usize, gamma: Payload) -> Self {
        GenAut::DehnTwist { i, j, gamma }
    }

    pub fn right_transvection(i: usize, j: usize, gamma: Payload) -> Self {
        GenAut::RightTransvection { i, j, gamma }
    }

    pub fn left_transvection(i: usize, j: usize, gamma: Payload) -> Self {
        GenAut::LeftTransvection { i, j, gamma }
    }

    pub fn permutation(i: usize, j: usize) -> Self {
        GenAut::Permutation { i, j }
    }

    pub fn reflection(i: usize) -> Self {
        GenAut::Reflection { i }
    }

    pub fn inner(conjugator: Word) -> Self {
        GenAut::Inner { conjugator }
    }

    /// Short human-readable name, e.g. `α_12^(g1^1)`.
    pub fn label(&self) -> String {
        fn pl(p: &Payload) -> String {
            match p {
                Payload::Free(e) => format!("{e}"),
                Payload::Finite(v) if v.len() == 1 => format!("{}", v[0]),
                Payload::Finite(v) => format!("{v:?}"),
            }
        }
        match self {
            GenAut::FactorAut { position, matrix } => format!("φ_{position}{matrix:?}"),
            GenAut::Permutation { i, j } => format!("ω_{i}{j}"),
            GenAut::DehnTwist { i, j, gamma } => format!("α_{i}{j}^({})", pl(gamma)),
            GenAut::RightTransvection { i, j, gamma } => format!("ρ_{i}{j}^({})", pl(gamma)),
            GenAut::LeftTransvection { i, j, gamma } => format!("λ_{i}{j}^({})", pl(gamma)),
            GenAut::Reflection { i } => format!("τ_{i}"),
            GenAut::Inner { conjugator } => format!("ad({conjugator})"),
        }
    }
}

/// A generator with an exponent sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    #[serde(flatten)]
    pub generator: GenAut,
    pub sign: i8,
}

impl Letter {
    pub fn new(generator: GenAut, sign: i8) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be ±1");
        Letter { generator, sign }
    }

    pub fn inverse(&self) -> Letter {
        Letter { generator: self.generator.clone(), sign: -self.sign }
    }
}

/// A composition word in the standard generators; the rightmost letter applies first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AutWord {
    pub letters: Vec<Letter>,
}

impl AutWord {
    pub fn identity() -> Self {
        AutWord { letters: Vec::new() }
    }

    pub fn gen(g: GenAut) -> Self {
        AutWord { letters: vec![Letter::new(g, 1)] }
    }

    pub fn gen_inv(g: GenAut) -> Self {
        AutWord { letters: vec![Letter::new(g, -1)] }
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        AutWord { letters }
    }

    /// Composition of several words, leftmost outermost.
    pub fn product<'a>(ws: impl IntoIterator<Item = &'a AutWord>) -> Self {
        AutWord { letters: ws.into_iter().flat_map(|w| w.letters.iter().cloned()).collect() }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AutWord) -> AutWord {
        AutWord::product([self, other])
    }

    pub fn inverse(&self) -> AutWord {
        AutWord { letters: self.letters.iter().rev().map(Letter::inverse).collect() }
    }

    pub fn pow(&self, k: i64) -> AutWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = AutWord::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.compose(&base);
        }
        out
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn label(&self) -> String {
        if self.letters.is_empty() {
            return "id".into();
        }
        self.letters
            .iter()
            .map(|l| {
                if l.sign == 1 {
                    l.generator.label()
                } else {
                    format!("({})^-1", l.generator.label())
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Images of the canonical generators: `free[i-1]` is the image of `a_i`,
/// `factors[s][k]` the image of `e_k` in the `s`-th finite factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorImages {
    pub free: Vec<Word>,
    pub factors: Vec<Vec<Word>>,
}

impl GeneratorImages {
    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.free.iter().chain(self.factors.iter().flatten())
    }

    fn map(&self, mut f: impl FnMut(&Word) -> Word) -> GeneratorImages {
        GeneratorImages {
            free: self.free.iter().map(&mut f).collect(),
            factors: self.factors.iter().map(|ws| ws.iter().map(&mut f).collect()).collect(),
        }
    }

    /// Image of the generator at `pos` (factor generator `k` for finite positions).
    pub fn image(&self, g: &GroupSpec, pos: usize, k: usize) -> &Word {
        if g.is_free_position(pos) {
            &self.free[pos - 1]
        } else {
            &self.factors[pos - g.free_rank - 1][k]
        }
    }
}

/// Outcome of an inner-automorphism search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InnerSearch {
    pub conjugator: Option<Word>,
    /// Exponent bound used when the pivot has an infinite cyclic centralizer.
    pub bound: Option<u64>,
    pub candidates: usize,
}

fn matrix_apply(f: &FactorSpec, m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    let mut out: Vec<i64> = (0..f.rank()).map(|l| (0..f.rank()).map(|k| m[l][k] * v[k]).sum()).collect();
    f.reduce(&mut out);
    out
}

fn identity_matrix(rank: usize) -> Vec<Vec<i64>> {
    (0..rank).map(|l| (0..rank).map(|k| i64::from(l == k)).collect()).collect()
}

impl FactorSpec {
    /// Image of `v` under the automorphism with the given matrix.
    pub fn apply_matrix(&self, m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
        matrix_apply(self, m, v)
    }

    /// Checks that `m` defines an automorphism of this group.
    pub fn validate_matrix(&self, m: &[Vec<i64>]) -> Result<()> {
        let r = self.rank();
        if m.len() != r || m.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidGenerator(format!("matrix must be {r}x{r}")));
        }
        let mf = self.invariant_factors();
        for k in 0..r {
            for l in 0..r {
                if ((mf[k] as i64) * m[l][k]).rem_euclid(mf[l] as i64) != 0 {
                    return Err(Error::InvalidGenerator(format!(
                        "column {k} is not a homomorphic image of a generator of order {}",
                        mf[k]
                    )));
                }
            }
        }
        let images: HashSet<Vec<i64>> = self.elements().iter().map(|v| matrix_apply(self, m, v)).collect();
        if images.len() as u64 != self.order() {
            return Err(Error::InvalidGenerator("matrix is not invertible".into()));
        }
        Ok(())
    }

    /// Matrix of the inverse automorphism.
    pub fn invert_matrix(&self, m: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let elems = self.elements();
        let r = self.rank();
        let mut inv = vec![vec![0; r]; r];
        for k in 0..r {
            let target = self.generator(k);
            let pre = elems
                .iter()
                .find(|v| matrix_apply(self, m, v) == target)
                .expect("matrix validated as invertible");
            for (row, &x) in inv.iter_mut().zip(pre) {
                row[k] = x;
            }
        }
        inv
    }

    /// Every automorphism of this group, identity first.
    pub fn automorphisms(&self) -> Vec<Vec<Vec<i64>>> {
        let r = self.rank();
        let mf = self.invariant_factors().to_vec();
        let elems = self.elements();
        // admissible images of e_k: elements killed by m_k
        let columns: Vec<Vec<&Vec<i64>>> = (0..r)
            .map(|k| {
                elems
                    .iter()
                    .filter(|v| v.iter().zip(&mf).all(|(&x, &ml)| (x * mf[k] as i64).rem_euclid(ml as i64) == 0))
                    .collect()
            })
            .collect();
        let mut out = vec![identity_matrix(r)];
        let mut idx = vec![0usize; r];
        'outer: loop {
            let mut m = vec![vec![0i64; r]; r];
            for k in 0..r {
                for l in 0..r {
                    m[l][k] = columns[k][idx[k]][l];
                }
            }
            if m != out[0] && self.validate_matrix(&m).is_ok() {
                out.push(m);
            }
            let mut k = r;
            loop {
                if k == 0 {
                    break 'outer;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < columns[k].len() {
                    break;
                }
                idx[k] = 0;
            }
        }
        out
    }
}

impl GroupSpec {
    fn gamma_word(&self, i: usize, gamma: &Payload) -> Result<Word> {
        let w = self.element(i, gamma.clone())?;
        if w.is_identity() {
            return Err(Error::InvalidGenerator(format!("γ at position {i} is trivial")));
        }
        Ok(w)
    }

    /// Checks that a generator is well-defined over this group.
    pub fn validate_gen(&self, s: &GenAut) -> Result<()> {
        let distinct = |i: usize, j: usize| -> Result<()> {
            self.check_position(i)?;
            self.check_position(j)?;
            if i == j {
                return Err(Error::InvalidGenerator(format!("indices must differ, got {i} twice")));
            }
            Ok(())
        };
        match s {
            GenAut::FactorAut { position, matrix } => {
                self.check_position(*position)?;
                let f = self.factor(*position).ok_or_else(|| {
                    Error::InvalidGenerator(format!("position {position} is not a finite factor"))
                })?;
                f.validate_matrix(matrix)
            }
            GenAut::Permutation { i, j } => {
                distinct(*i, *j)?;
                if !self.isomorphic_positions(*i, *j) {
                    return Err(Error::InvalidGenerator(format!("factors {i} and {j} are not isomorphic")));
                }
                Ok(())
            }
            GenAut::DehnTwist { i, j, gamma } => {
                distinct(*i, *j)?;
                if self.is_free_position(*j) {
                    return Err(Error::InvalidGenerator(format!("Dehn twist target {j} must be finite")));
                }
                self.gamma_word(*i, gamma).map(|_| ())
            }
            GenAut::RightTransvection { i, j, gamma } | GenAut::LeftTransvection { i, j, gamma } => {
                distinct(*i, *j)?;
                if !self.is_free_position(*j) {
                    return Err(Error::InvalidGenerator(format!("transvection target {j} must be free")));
                }
                self.gamma_word(*i, gamma).map(|_| ())
            }
            GenAut::Reflection { i } => {
                if !self.is_free_position(*i) {
                    return Err(Error::InvalidGenerator(format!("reflection position {i} must be free")));
                }
                Ok(())
            }
            GenAut::Inner { conjugator } => self.validate_word(conjugator),
        }
    }

    pub fn validate_aut(&self, a: &AutWord) -> Result<()> {
        for l in &a.letters {
            if l.sign != 1 && l.sign != -1 {
                return Err(Error::InvalidGenerator(format!("sign {} is not ±1", l.sign)));
            }
            self.validate_gen(&l.generator)?;
        }
        Ok(())
    }

    /// The inverse of a generator, as a generator.
    pub fn gen_inverse(&self, s: &GenAut) -> GenAut {
        let neg = |i: usize, p: &Payload| -> Payload {
            let mut q = p.negate();
            if let (Payload::Finite(v), Some(f)) = (&mut q, self.factor(i)) {
                f.reduce(v);
            }
            q
        };
        match s {
            GenAut::FactorAut { position, matrix } => GenAut::FactorAut {
                position: *position,
                matrix: self.factor(*position).unwrap().invert_matrix(matrix),
            },
            GenAut::Permutation { .. } | GenAut::Reflection { .. } => s.clone(),
            GenAut::DehnTwist { i, j, gamma } => GenAut::DehnTwist { i: *i, j: *j, gamma: neg(*i, gamma) },
            GenAut::RightTransvection { i, j, gamma } => {
                GenAut::RightTransvection { i: *i, j: *j, gamma: neg(*i, gamma) }
            }
            GenAut::LeftTransvection { i, j, gamma } => {
                GenAut::LeftTransvection { i: *i, j: *j, gamma: neg(*i, gamma) }
            }
            GenAut::Inner { conjugator } => GenAut::Inner { conjugator: self.invert(conjugator) },
        }
    }

    /// Image of a single syllable under a generator.
    fn gen_image_syllable(&self, s: &GenAut, syl: &Syllable) -> Word {
        let p = syl.position;
        let single = || Word(vec![syl.clone()]);
        match s {
            GenAut::FactorAut { position, matrix } if *position == p => {
                let Payload::Finite(v) = &syl.payload else { unreachable!() };
                let f = self.factor(p).unwrap();
                self.reduce(vec![Syllable::finite(p, f.apply_matrix(matrix, v))])
            }
            GenAut::Permutation { i, j } if p == *i || p == *j => {
                let q = if p == *i { *j } else { *i };
                Word(vec![Syllable { position: q, payload: syl.payload.clone() }])
            }
            GenAut::DehnTwist { i, j, gamma } if p == *j => {
                let g = self.reduce(vec![Syllable { position: *i, payload: gamma.clone() }]);
                self.product([&self.invert(&g), &single(), &g])
            }
            GenAut::RightTransvection { i, j, gamma } | GenAut::LeftTransvection { i, j, gamma }
                if p == *j =>
            {
                let g = self.reduce(vec![Syllable { position: *i, payload: gamma.clone() }]);
                let a = self.free_gen(*j);
                let img = if matches!(s, GenAut::RightTransvection { .. }) {
                    self.mul(&a, &g)
                } else {
                    self.mul(&g, &a)
                };
                let Payload::Free(e) = syl.payload else { unreachable!() };
                self.pow(&img, e)
            }
            GenAut::Reflection { i } if p == *i => {
                let Payload::Free(e) = syl.payload else { unreachable!() };
                Word(vec![Syllable::free(p, -e)])
            }
            GenAut::Inner { conjugator } => self.conjugate(conjugator, &single()),
            _ => single(),
        }
    }

    /// Image of a word under one generator.
    pub fn apply_gen(&self, s: &GenAut, w: &Word) -> Word {
        if let GenAut::Inner { conjugator } = s {
            return self.conjugate(conjugator, w);
        }
        let parts: Vec<Word> = w.0.iter().map(|syl| self.gen_image_syllable(s, syl)).collect();
        self.product(&parts)
    }

    fn apply_letter(&self, l: &Letter, w: &Word) -> Word {
        if l.sign == 1 {
            self.apply_gen(&l.generator, w)
        } else {
            self.apply_gen(&self.gen_inverse(&l.generator), w)
        }
    }

    /// `A(w)`, rightmost letter first.
    pub fn apply(&self, a: &AutWord, w: &Word) -> Word {
        a.letters.iter().rev().fold(w.clone(), |acc, l| self.apply_letter(l, &acc))
    }

    pub fn identity_images(&self) -> GeneratorImages {
        GeneratorImages {
            free: (1..=self.free_rank).map(|i| self.free_gen(i)).collect(),
            factors: (self.free_rank + 1..=self.n())
                .map(|p| (0..self.factor(p).unwrap().rank()).map(|k| self.factor_gen(p, k)).collect())
                .collect(),
        }
    }

    pub fn images(&self, a: &AutWord) -> GeneratorImages {
        let mut cur = self.identity_images();
        for l in a.letters.iter().rev() {
            let inv;
            let s = if l.sign == 1 {
                &l.generator
            } else {
                inv = self.gen_inverse(&l.generator);
                &inv
            };
            cur = cur.map(|w| self.apply_gen(s, w));
        }
        cur
    }

    /// Checks that the images respect the orders of the factor generators.
    pub fn validate_images(&self, im: &GeneratorImages) -> Result<()> {
        if im.free.len() != self.free_rank || im.factors.len() != self.factors.len() {
            return Err(Error::InvalidImages("wrong number of images".into()));
        }
        for w in im.iter() {
            self.validate_word(w)?;
        }
        for (f, ws) in self.factors.iter().zip(&im.factors) {
            if ws.len() != f.rank() {
                return Err(Error::InvalidImages("wrong number of factor images".into()));
            }
            for (w, &m) in ws.iter().zip(f.invariant_factors()) {
                if !self.pow(w, m as i64).is_identity() {
                    return Err(Error::InvalidImages(format!("image {w} does not have order dividing {m}")));
                }
            }
            // images of one abelian factor must commute
            for a in ws {
                for b in ws {
                    if self.mul(a, b) != self.mul(b, a) {
                        return Err(Error::InvalidImages("factor images do not commute".into()));
                    }
                }
            }
        }
        Ok(())
    }

    /// Evaluates the endomorphism determined by `im` on `w`.
    pub fn evaluate_images(&self, im: &GeneratorImages, w: &Word) -> Word {
        let mut parts = Vec::with_capacity(w.len());
        for syl in &w.0 {
            match &syl.payload {
                Payload::Free(e) => parts.push(self.pow(&im.free[syl.position - 1], *e)),
                Payload::Finite(v) => {
                    for (k, &c) in v.iter().enumerate() {
                        parts.push(self.pow(im.image(self, syl.position, k), c));
                    }
                }
            }
        }
        self.product(&parts)
    }

    /// Composition of images: `(a ∘ b)(x) = a(b(x))`.
    pub fn compose_images(&self, a: &GeneratorImages, b: &GeneratorImages) -> GeneratorImages {
        b.map(|w| self.evaluate_images(a, w))
    }

    pub fn equal(&self, a: &AutWord, b: &AutWord) -> bool {
        self.images(a) == self.images(b)
    }

    /// Replaces every image `w` by `g w g^{-1}`.
    pub fn conjugate_images(&self, g: &Word, im: &GeneratorImages) -> GeneratorImages {
        let gi = self.invert(g);
        im.map(|w| self.product([g, w, &gi]))
    }

    /// Some `g` with `im` equal to the images of `ad(g)`, or `None`.
    pub fn is_inner(&self, im: &GeneratorImages) -> Option<Word> {
        self.inner_search(im).conjugator
    }

    /// Inner-automorphism search with its bookkeeping.
    ///
    /// The pivot is a finite-factor generator when one exists (its centralizer
    /// is the factor, enumerated exhaustively), otherwise `a_1`, whose
    /// centralizer `⟨a_1⟩` is searched over `|k| ≤ K` with
    /// `K = max image length + |g₀| + 2`.
    pub fn inner_search(&self, im: &GeneratorImages) -> InnerSearch {
        let id = self.identity_images();
        if self.n() < 2 {
            let conjugator = (*im == id).then(Word::identity);
            return InnerSearch { conjugator, bound: None, candidates: 1 };
        }
        let check = |c: &Word| self.conjugate_images(c, &id) == *im;
        if let Some(pos) = (1..=self.n()).find(|&p| !self.is_free_position(p)) {
            let x = self.factor_gen(pos, 0);
            let Some(g0) = self.solve_conjugator(&x, im.image(self, pos, 0)) else {
                return InnerSearch { conjugator: None, bound: None, candidates: 0 };
            };
            let f = self.factor(pos).unwrap();
            let mut candidates = 0;
            for v in f.elements() {
                candidates += 1;
                let c = self.mul(&g0, &self.reduce(vec![Syllable::finite(pos, v)]));
                if check(&c) {
                    return InnerSearch { conjugator: Some(c), bound: None, candidates };
                }
            }
            InnerSearch { conjugator: None, bound: None, candidates }
        } else {
            let x = self.free_gen(1);
            let Some(g0) = self.solve_conjugator(&x, &im.free[0]) else {
                return InnerSearch { conjugator: None, bound: None, candidates: 0 };
            };
            let max_image = im.iter().map(Word::letter_length).max().unwrap_or(0);
            let bound = max_image + g0.letter_length() + 2;
            let k_max = bound as i64;
            let mut candidates = 0;
            for k in std::iter::once(0).chain((1..=k_max).flat_map(|k| [k, -k])) {
                candidates += 1;
                let c = self.mul(&g0, &self.pow(&x, k));
                if check(&c) {
                    return InnerSearch { conjugator: Some(c), bound: Some(bound), candidates };
                }
            }
            InnerSearch { conjugator: None, bound: Some(bound), candidates }
        }
    }

    /// Some `g` with `A = ad(g) ∘ B`.
    pub fn equal_mod_inner(&self, a: &AutWord, b: &AutWord) -> Option<Word> {
        self.is_inner(&self.images(&a.compose(&b.inverse())))
    }

    /// As [`GroupSpec::equal_mod_inner`], requiring the conjugator to lie in `N`.
    pub fn equal_mod_inner_n(&self, a: &AutWord, b: &AutWord, n: &SubgroupSpec) -> Option<Word> {
        self.equal_mod_inner(a, b).filter(|g| self.in_subgroup(g, n))
    }

    /// `ad(g) = ad(h)`; the center is trivial once `n ≥ 2`.
    pub fn same_inner(&self, g: &Word, h: &Word) -> bool {
        let id = self.identity_images();
        self.conjugate_images(g, &id) == self.conjugate_images(h, &id)
    }

    /// The non-trivial single-syllable elements of position `i` used as `γ`:
    /// every non-zero element of a finite factor, `a_i^{±1}` for a free position.
    pub fn gamma_choices(&self, i: usize) -> Vec<Payload> {
        match self.factor(i) {
            Some(f) => f.nonzero_elements().into_iter().map(Payload::Finite).collect(),
            None => vec![Payload::Free(1), Payload::Free(-1)],
        }
    }

    /// Non-identity automorphisms of the finite factor at `pos`.
    pub fn factor_auts(&self, pos: usize) -> Vec<GenAut> {
        match self.factor(pos) {
            Some(f) => f
                .automorphisms()
                .into_iter()
                .skip(1)
                .map(|matrix| GenAut::FactorAut { position: pos, matrix })
                .collect(),
            None => Vec::new(),
        }
    }

    /// The standard generating set: non-identity factor automorphisms,
    /// permutations `ω_ij` (`i < j`), Dehn twists, transvections (with
    /// `γ = a_i` for free `i`) and reflections.
    pub fn standard_generators(&self) -> Vec<GenAut> {
        let mut out = Vec::new();
        for p in self.positions() {
            out.extend(self.factor_auts(p));
        }
        for i in self.positions() {
            for j in i + 1..=self.n() {
                if self.isomorphic_positions(i, j) {
                    out.push(GenAut::permutation(i, j));
                }
            }
        }
        let gammas = |i: usize| -> Vec<Payload> {
            if self.is_free_position(i) {
                vec![Payload::Free(1)]
            } else {
                self.gamma_choices(i)
            }
        };
        for i in self.positions() {
            for j in self.positions().filter(|&j| j != i) {
                for gamma in gammas(i) {
                    if self.is_free_position(j) {
                        out.push(GenAut::right_transvection(i, j, gamma.clone()));
                        out.push(GenAut::left_transvection(i, j, gamma));
                    } else {
                        out.push(GenAut::dehn_twist(i, j, gamma));
                    }
                }
            }
        }
        for i in 1..=self.free_rank {
            out.push(GenAut::reflection(i));
        }
        out
    }
}
