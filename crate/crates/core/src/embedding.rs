//! Corrected lifts `Out(G) → Aut(G)/N`, verification of the splitting, and
//! the resulting maps `Out(G) → Out(F_m)`.
//!
//! With `u_i (n-1) + t_i r_i = 1`, the corrected lift of a generator `s` is
//! `ŝ = ad(c) ∘ s` where `c` is
//!
//! | generator            | `c`          |
//! |----------------------|--------------|
//! | `α_ij^(γ)`           | `γ^{u_i}`    |
//! | `λ_ij^(γ)`           | `γ^{-u_i}`   |
//! | `τ_i`                | `a_i^{u_i}`  |
//! | `φ`, `ω`, `ρ`        | `1`          |

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::automorphism::{AutWord, GenAut, GeneratorImages, Letter};
use crate::covering::{build_cover, free_basis, FreeBasis};
use crate::error::{Error, Result};
use crate::freegroup::FreeGroupAut;
use crate::group::{GroupSpec, Payload, SubgroupSpec, Word};
use crate::relations::{enumerate_relations, summarize, verify_all, Level, RelationInstance, RelationReport, RelationSummary};
use crate::restriction::{injectivity_probe, restrict, restrict_certified, InjectivityReport};

/// `(u, t)` with `u k + t r = 1` and `0 <= u < r` (`u = 0` when `r = 1`).
pub fn bezout(r: u64, k: u64) -> Result<(i64, i64)> {
    if r == 0 || crate::group::gcd(r, k) != 1 {
        return Err(Error::NotCoprime { r, k });
    }
    let (r, k) = (r as i128, k as i128);
    let u = (0..r).find(|u| (u * k).rem_euclid(r) == 1 % r).expect("gcd is 1");
    let t = (1 - u * k) / r;
    Ok((u as i64, t as i64))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftParams {
    /// `n - 1`.
    pub k: u64,
    /// `(u_i, t_i)` for positions `1..=n`.
    pub pairs: Vec<(i64, i64)>,
}

impl LiftParams {
    pub fn new(g: &GroupSpec, n: &SubgroupSpec) -> Result<Self> {
        n.validate(g)?;
        n.check_coprime(g)?;
        let k = g.n().saturating_sub(1) as u64;
        let pairs = g.positions().map(|p| bezout(n.exponent(p), k)).collect::<Result<Vec<_>>>()?;
        Ok(LiftParams { k, pairs })
    }

    pub fn u(&self, pos: usize) -> i64 {
        self.pairs[pos - 1].0
    }

    pub fn t(&self, pos: usize) -> i64 {
        self.pairs[pos - 1].1
    }
}

/// `ad(conjugator) ∘ generator`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftedGenerator {
    pub generator: GenAut,
    pub conjugator: Word,
}

impl LiftedGenerator {
    pub fn aut_word(&self) -> AutWord {
        self.letter(1)
    }

    /// The lift of `generator^sign` as a word.
    pub fn letter(&self, sign: i8) -> AutWord {
        let s = Letter::new(self.generator.clone(), sign);
        if self.conjugator.is_identity() {
            return AutWord::from_letters(vec![s]);
        }
        let c = Letter::new(GenAut::inner(self.conjugator.clone()), sign);
        if sign == 1 {
            AutWord::from_letters(vec![c, s])
        } else {
            AutWord::from_letters(vec![s, c])
        }
    }
}

fn gamma_word(g: &GroupSpec, i: usize, gamma: &Payload) -> Word {
    g.element(i, gamma.clone()).expect("validated generator")
}

pub fn corrected_lift(g: &GroupSpec, s: &GenAut, p: &LiftParams) -> LiftedGenerator {
    let conjugator = match s {
        GenAut::DehnTwist { i, gamma, .. } => g.pow(&gamma_word(g, *i, gamma), p.u(*i)),
        GenAut::LeftTransvection { i, gamma, .. } => g.pow(&gamma_word(g, *i, gamma), -p.u(*i)),
        GenAut::Reflection { i } => g.pow(&g.free_gen(*i), p.u(*i)),
        _ => Word::identity(),
    };
    LiftedGenerator { generator: s.clone(), conjugator }
}

/// Replaces every letter by its corrected lift.
pub fn lift_word(g: &GroupSpec, w: &AutWord, p: &LiftParams) -> AutWord {
    let parts: Vec<AutWord> = w.letters.iter().map(|l| corrected_lift(g, &l.generator, p).letter(l.sign)).collect();
    AutWord::product(&parts)
}

/// The conjugator `n` with `lift(lhs) ∘ lift(rhs)^{-1} = ad(n)` predicted by
/// hand computation, for the families where one is available.
pub fn predicted_conjugator(g: &GroupSpec, inst: &RelationInstance, p: &LiftParams) -> Option<Word> {
    let pw = |w: &Word, e: i64| g.pow(w, e);
    match inst.family {
        4 => {
            let (i, k) = (inst.indices[0], inst.indices[2]);
            Some(g.commutator(&pw(&inst.gammas[0], p.u(i)), &pw(&inst.gammas[1], p.u(k))))
        }
        5 => {
            let (i, k) = (inst.indices[0], inst.indices[2]);
            let (gi, gk) = (&inst.gammas[0], &inst.gammas[1]);
            let x = g.commutator(&pw(gk, p.u(k) - 1), &pw(gi, p.u(i)));
            let y = g.commutator(&pw(gi, p.u(i)), &pw(gk, -p.u(k)));
            Some(g.mul(&x, &y))
        }
        13 => {
            let (i, k) = (inst.indices[0], inst.indices[2]);
            Some(g.commutator(&pw(&inst.gammas[0], p.u(i)), &pw(&g.free_gen(k), p.u(k))))
        }
        19 => {
            let (i, j) = (inst.indices[0], inst.indices[1]);
            let gi = &inst.gammas[0];
            let aj = g.free_gen(j);
            let u = p.u(i);
            Some(g.product([&pw(&g.mul(&aj, gi), u), &pw(gi, -u), &pw(&aj, -u)]))
        }
        21 => {
            let (i, j) = (inst.indices[0], inst.indices[1]);
            let gi = &inst.gammas[0];
            let aj = g.free_gen(j);
            let u = p.u(i);
            Some(g.product([&pw(&aj, u), &pw(&g.mul(gi, &aj), -u), &pw(gi, u)]))
        }
        0 => {
            let i = inst.indices[0];
            Some(pw(&inst.gammas[0], p.u(i) * p.k as i64 - 1))
        }
        _ => None,
    }
}

/// The instance with both sides lifted, to be checked modulo `Inn(N)`.
pub fn lift_instance(g: &GroupSpec, inst: &RelationInstance, p: &LiftParams) -> RelationInstance {
    let lhs = lift_word(g, &inst.lhs, p);
    let rhs = lift_word(g, &inst.rhs, p);
    RelationInstance {
        family: inst.family,
        label: inst.label.clone(),
        indices: inst.indices.clone(),
        gammas: inst.gammas.clone(),
        lhs,
        rhs,
        level: Level::ModInnN,
        predicted: predicted_conjugator(g, inst, p),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingReport {
    pub summary: RelationSummary,
    /// Instances carrying a hand-computed conjugator, and how many matched.
    pub predicted: usize,
    pub predicted_matched: usize,
    pub failures: Vec<RelationReport>,
}

impl SplittingReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.predicted == self.predicted_matched
    }
}

/// Verifies that every relation instance lifts to `ad(n)` with `n ∈ N`.
pub fn verify_splitting(g: &GroupSpec, n: &SubgroupSpec, instances: &[RelationInstance], skipped: &[String]) -> Result<SplittingReport> {
    let p = LiftParams::new(g, n)?;
    let lifted: Vec<RelationInstance> = instances.par_iter().map(|i| lift_instance(g, i, &p)).collect();
    let reports = verify_all(g, &lifted, n);
    Ok(SplittingReport {
        summary: summarize(&reports, skipped),
        predicted: reports.iter().filter(|r| r.matches_predicted.is_some()).count(),
        predicted_matched: reports.iter().filter(|r| r.matches_predicted == Some(true)).count(),
        failures: reports.into_iter().filter(|r| !r.passed).collect(),
    })
}

/// `restrict(ŝ)` on the basis, flagged once its inverse has been checked.
pub fn embed_generator(s: &GenAut, p: &LiftParams, basis: &FreeBasis) -> Result<FreeGroupAut> {
    let lift = corrected_lift(&basis.cover.group, s, p);
    restrict_certified(&lift.aut_word(), basis)
}

/// The image of a lifted relator equals conjugation by the rewritten witness.
pub fn relator_consistent(inst: &RelationInstance, p: &LiftParams, basis: &FreeBasis, witness: &Word) -> Result<bool> {
    let g = &basis.cover.group;
    let lifted = lift_instance(g, inst, p);
    let f = restrict(&lifted.lhs.compose(&lifted.rhs.inverse()), basis)?;
    Ok(f.is_conjugation_by(&basis.rewrite(witness)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddedGenerator {
    pub label: String,
    pub generator: GenAut,
    pub conjugator: Word,
    pub image: FreeGroupAut,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbedReport {
    pub group: GroupSpec,
    #[serde(rename = "N")]
    pub subgroup: SubgroupSpec,
    pub m: usize,
    pub expected_m: Option<usize>,
    pub basis: Vec<Word>,
    pub generators: Vec<EmbeddedGenerator>,
    pub splitting: SplittingReport,
    pub probe: Option<InjectivityReport>,
}

impl EmbedReport {
    pub fn passed(&self) -> bool {
        self.expected_m.is_none_or(|m| m == self.m)
            && self.splitting.passed()
            && self.generators.iter().all(|e| e.image.verified)
            && self.probe.as_ref().is_none_or(|r| r.passed() || r.skipped.is_some())
    }
}

/// The whole pipeline: splitting, free basis, generator images and an
/// optional injectivity probe of length `probe_len`.
pub fn embed_report(g: &GroupSpec, n: &SubgroupSpec, probe_len: Option<usize>) -> Result<EmbedReport> {
    let p = LiftParams::new(g, n)?;
    let cover = build_cover(g, n)?;
    let basis = free_basis(&cover)?;
    let suite = enumerate_relations(g);
    let splitting = verify_splitting(g, n, &suite.instances, &suite.skipped)?;
    let generators = g
        .standard_generators()
        .par_iter()
        .map(|s| {
            let lift = corrected_lift(g, s, &p);
            Ok(EmbeddedGenerator {
                label: s.label(),
                generator: s.clone(),
                image: embed_generator(s, &p, &basis)?,
                conjugator: lift.conjugator,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let probe = probe_len.map(|k| injectivity_probe(&basis, &g.standard_generators(), k));
    Ok(EmbedReport {
        group: g.clone(),
        subgroup: n.clone(),
        m: basis.rank(),
        expected_m: None,
        basis: basis.words.clone(),
        generators,
        splitting,
        probe,
    })
}

/// `2^{n-1}(n-2) + 1`.
pub fn coxeter_rank(n: usize) -> usize {
    (1usize << (n - 1)) * (n - 2) + 1
}

/// The pipeline for `W_n` with `N = G'G^2`, `n` even.
pub fn out_wn_report(n: usize) -> Result<EmbedReport> {
    if n < 2 {
        return Err(Error::TooFewPositions { required: 2, found: n });
    }
    if n % 2 == 1 {
        return Err(Error::EvenCoxeterDegree(n));
    }
    let mut rep = embed_report(&GroupSpec::coxeter(n), &SubgroupSpec::Uniform(2), None)?;
    rep.expected_m = Some(coxeter_rank(n));
    Ok(rep)
}

/// `[σ(1), σ(2), σ(3)]`.
pub type Perm3 = [usize; 3];

pub fn permutations3() -> Vec<Perm3> {
    vec![[1, 2, 3], [2, 1, 3], [1, 3, 2], [3, 2, 1], [2, 3, 1], [3, 1, 2]]
}

fn perm_inverse(s: &Perm3) -> Perm3 {
    let mut out = [0; 3];
    for (i, &si) in s.iter().enumerate() {
        out[si - 1] = i + 1;
    }
    out
}

/// `f(x_i) = α_{i4} τ_i` in `Aut(F_4)`, with `α_{i4} = ρ_{i4} λ_{i4}^{-1}`.
pub fn w3_f_generator(i: usize) -> AutWord {
    let gamma = Payload::Free(1);
    AutWord::from_letters(vec![
        Letter::new(GenAut::right_transvection(i, 4, gamma.clone()), 1),
        Letter::new(GenAut::left_transvection(i, 4, gamma), -1),
        Letter::new(GenAut::reflection(i), 1),
    ])
}

/// `ω_σ`: `a_i ↦ a_σ(i)` for `i <= 3`, `a_4 ↦ a_4`.
pub fn w3_f_perm(f4: &GroupSpec, s: &Perm3) -> GeneratorImages {
    let mut im = f4.identity_images();
    for (img, &si) in im.free.iter_mut().zip(s) {
        *img = f4.free_gen(si);
    }
    im
}

/// `f(x_{i_1} ⋯ x_{i_k} σ)`.
pub fn w3_f(f4: &GroupSpec, w: &[usize], s: &Perm3) -> GeneratorImages {
    let word = AutWord::product(&w.iter().map(|&i| w3_f_generator(i)).collect::<Vec<_>>());
    f4.compose_images(&f4.images(&word), &w3_f_perm(f4, s))
}

/// Reduced words of `W_3` of length `<= max_len`, as index sequences.
pub fn w3_normal_forms(max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (1..=3).filter(move |&i| w.last() != Some(&i)).map(move |i| {
                    let mut v = w.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct W3Report {
    pub generator_images: Vec<GeneratorImages>,
    pub squares: Vec<Check>,
    pub equivariance: Vec<Check>,
    pub out0_relations: Vec<Check>,
    pub max_len: usize,
    pub probed: usize,
    /// Largest exponent bound used by the inner search.
    pub search_bound: u64,
    pub inner: Vec<String>,
}

impl W3Report {
    pub fn passed(&self) -> bool {
        [&self.squares, &self.equivariance, &self.out0_relations].iter().all(|cs| cs.iter().all(|c| c.holds))
            && self.inner.is_empty()
    }
}

/// The explicit map `Out(W_3) ≅ W_3 ⋊ S_3 → Out(F_4)` and its checks.
pub fn w3_into_out_f4(max_len: usize) -> W3Report {
    let f4 = GroupSpec::free(4);
    let id = f4.identity_images();
    let fx: Vec<GeneratorImages> = (1..=3).map(|i| f4.images(&w3_f_generator(i))).collect();
    let squares = (1..=3)
        .map(|i| Check { label: format!("f(x{i})^2 = 1"), holds: f4.compose_images(&fx[i - 1], &fx[i - 1]) == id })
        .collect();
    let equivariance = permutations3()
        .iter()
        .map(|s| {
            let (om, om_inv) = (w3_f_perm(&f4, s), w3_f_perm(&f4, &perm_inverse(s)));
            let holds = (1..=3).all(|i| f4.compose_images(&f4.compose_images(&om, &fx[i - 1]), &om_inv) == fx[s[i - 1] - 1]);
            Check { label: format!("f(s) f(x_i) f(s)^-1 = f(x_s(i)), s = {s:?}"), holds }
        })
        .collect();
    let w3 = GroupSpec::coxeter(3);
    let alpha = |i: usize, j: usize| AutWord::gen(GenAut::dehn_twist(i, j, Payload::Finite(vec![1])));
    let out0_relations = [((1, 2), (1, 3)), ((2, 1), (2, 3)), ((3, 1), (3, 2))]
        .iter()
        .map(|&((i, j), (k, l))| Check {
            label: format!("a{i}{j} = a{k}{l} in Out(W3)"),
            holds: w3.equal_mod_inner(&alpha(i, j), &alpha(k, l)).is_some(),
        })
        .collect();
    let cases: Vec<(Vec<usize>, Perm3)> = w3_normal_forms(max_len)
        .into_iter()
        .flat_map(|w| permutations3().into_iter().map(move |s| (w.clone(), s)))
        .filter(|(w, s)| !(w.is_empty() && *s == [1, 2, 3]))
        .collect();
    let results: Vec<(u64, Option<String>)> = cases
        .par_iter()
        .map(|(w, s)| {
            let search = f4.inner_search(&w3_f(&f4, w, s));
            (search.bound.unwrap_or(0), search.conjugator.map(|_| format!("w = {w:?}, s = {s:?}")))
        })
        .collect();
    W3Report {
        generator_images: fx,
        squares,
        equivariance,
        out0_relations,
        max_len,
        probed: cases.len(),
        search_bound: results.iter().map(|r| r.0).max().unwrap_or(0),
        inner: results.into_iter().filter_map(|r| r.1).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bezout_examples() {
        assert_eq!(bezout(2, 3).unwrap(), (1, -1));
        assert_eq!(bezout(1, 7).unwrap(), (0, 1));
        assert_eq!(bezout(2, 2), Err(Error::NotCoprime { r: 2, k: 2 }));
        for r in 1..30u64 {
            for k in 0..30u64 {
                if let Ok((u, t)) = bezout(r, k) {
                    assert_eq!(u * k as i64 + t * r as i64, 1);
                    assert!(0 <= u && (u < r as i64 || r == 1));
                } else {
                    assert_ne!(crate::group::gcd(r, k), 1);
                }
            }
        }
    }

    #[test]
    fn lift_table() {
        let g = GroupSpec::coxeter(4);
        let p = LiftParams::new(&g, &SubgroupSpec::Uniform(2)).unwrap();
        assert_eq!(p.u(1), 1);
        let x1 = g.factor_gen(1, 0);
        assert!(corrected_lift(&g, &GenAut::permutation(1, 2), &p).conjugator.is_identity());
        let a12 = GenAut::dehn_twist(1, 2, Payload::Finite(vec![1]));
        assert_eq!(corrected_lift(&g, &a12, &p).conjugator, x1);

        let h = GroupSpec::with_cyclic(2, &[3, 3]).unwrap();
        let p = LiftParams::new(&h, &SubgroupSpec::Uniform(2)).unwrap();
        assert_eq!(p.u(1), 1);
        assert_eq!(corrected_lift(&h, &GenAut::reflection(1), &p).conjugator, h.free_gen(1));
        let l = GenAut::left_transvection(3, 1, Payload::Finite(vec![1]));
        assert_eq!(corrected_lift(&h, &l, &p).conjugator, h.pow(&h.factor_gen(3, 0), -1));
        assert!(corrected_lift(&h, &GenAut::right_transvection(3, 1, Payload::Finite(vec![1])), &p)
            .conjugator
            .is_identity());
    }

    #[test]
    fn lifts_project_to_their_generator() {
        for (g, r) in [(GroupSpec::coxeter(4), 2), (GroupSpec::with_cyclic(2, &[3, 3]).unwrap(), 2)] {
            let p = LiftParams::new(&g, &SubgroupSpec::Uniform(r)).unwrap();
            for s in g.standard_generators() {
                let lift = corrected_lift(&g, &s, &p);
                let c = g.equal_mod_inner(&lift.aut_word(), &AutWord::gen(s.clone())).unwrap();
                assert!(g.same_inner(&c, &lift.conjugator));
                let back = lift.aut_word().compose(&lift.letter(-1));
                assert!(g.equal(&back, &AutWord::identity()));
            }
        }
    }

    #[test]
    fn lift_params_reject_non_coprime() {
        assert_eq!(
            LiftParams::new(&GroupSpec::coxeter(3), &SubgroupSpec::Uniform(2)),
            Err(Error::NotCoprime { r: 2, k: 2 })
        );
    }

    #[test]
    fn splitting_w4() {
        let g = GroupSpec::coxeter(4);
        let n = SubgroupSpec::Uniform(2);
        let suite = enumerate_relations(&g);
        let rep = verify_splitting(&g, &n, &suite.instances, &suite.skipped).unwrap();
        assert!(rep.passed(), "{:#?}", rep.failures.first());
        assert!(rep.predicted > 0);
        // relation (0): conjugator γ^{t r} = γ^{-2}, trivial in W_4 but in N regardless
        let zero: Vec<&RelationInstance> = suite.instances.iter().filter(|i| i.family == 0).collect();
        let p = LiftParams::new(&g, &n).unwrap();
        assert_eq!(p.t(1) * 2, -2);
        for inst in zero {
            let pred = predicted_conjugator(&g, inst, &p).unwrap();
            assert!(g.in_subgroup(&pred, &n));
        }
    }

    #[test]
    fn splitting_with_free_factor() {
        let g = GroupSpec::with_cyclic(2, &[3, 3]).unwrap();
        let n = SubgroupSpec::Uniform(2);
        let suite = enumerate_relations(&g);
        let rep = verify_splitting(&g, &n, &suite.instances, &suite.skipped).unwrap();
        assert!(rep.passed(), "{:#?}", rep.failures.first());
        for f in [13u8, 19, 21, 0] {
            assert!(rep.summary.families.iter().any(|s| s.family == f && s.total > 0), "family {f}");
        }
        // (21): the conjugator lies in G'
        let p = LiftParams::new(&g, &n).unwrap();
        for inst in suite.instances.iter().filter(|i| i.family == 21) {
            let c = predicted_conjugator(&g, inst, &p).unwrap();
            assert!(g.abelianize(&c).is_zero());
        }
    }

    #[test]
    fn identity_relation_lifts_trivially() {
        let g = GroupSpec::coxeter(4);
        let p = LiftParams::new(&g, &SubgroupSpec::Uniform(2)).unwrap();
        let s = AutWord::gen(GenAut::permutation(1, 3));
        let inst = RelationInstance {
            family: 99,
            label: "A = A".into(),
            indices: vec![],
            gammas: vec![],
            lhs: s.clone(),
            rhs: s,
            level: Level::Exact,
            predicted: None,
        };
        let rep = crate::relations::verify_relation(&g, &lift_instance(&g, &inst, &p), &SubgroupSpec::Uniform(2));
        assert!(rep.passed && rep.holds_exact);
    }

    #[test]
    fn embedding_of_w4_generators() {
        let g = GroupSpec::coxeter(4);
        let n = SubgroupSpec::Uniform(2);
        let p = LiftParams::new(&g, &n).unwrap();
        let b = free_basis(&build_cover(&g, &n).unwrap()).unwrap();
        assert_eq!(b.rank(), 17);
        let a12 = GenAut::dehn_twist(1, 2, Payload::Finite(vec![1]));
        let f = embed_generator(&a12, &p, &b).unwrap();
        assert!(f.verified);
        assert_eq!(f.m, 17);
        // oracle: evaluate each image back in G against the lifted automorphism
        let lift = corrected_lift(&g, &a12, &p).aut_word();
        for (w, img) in b.words.iter().zip(&f.images) {
            assert_eq!(b.evaluate(img), g.apply(&lift, w));
        }
    }

    #[test]
    fn relators_map_to_conjugations() {
        let g = GroupSpec::coxeter(4);
        let n = SubgroupSpec::Uniform(2);
        let p = LiftParams::new(&g, &n).unwrap();
        let b = free_basis(&build_cover(&g, &n).unwrap()).unwrap();
        let suite = enumerate_relations(&g);
        for inst in suite.instances.iter().filter(|i| matches!(i.family, 0 | 4 | 5 | 8)).step_by(7) {
            let lifted = lift_instance(&g, inst, &p);
            let c = g.equal_mod_inner(&lifted.lhs, &lifted.rhs).unwrap();
            assert!(relator_consistent(inst, &p, &b, &c).unwrap(), "{}", inst.label);
        }
    }

    #[test]
    fn wn_reports() {
        assert_eq!(coxeter_rank(2), 1);
        assert_eq!(coxeter_rank(4), 17);
        assert_eq!(coxeter_rank(6), 129);
        let r2 = out_wn_report(2).unwrap();
        assert_eq!(r2.m, 1);
        assert!(r2.passed());
        let r4 = out_wn_report(4).unwrap();
        assert_eq!(r4.m, 17);
        assert!(r4.passed());
        let r6 = out_wn_report(6).unwrap();
        assert_eq!(r6.m, 129);
        assert!(r6.passed());
        assert_eq!(out_wn_report(5), Err(Error::EvenCoxeterDegree(5)));
        assert!(out_wn_report(1).is_err());
    }

    #[test]
    fn w3_generator_images() {
        let f4 = GroupSpec::free(4);
        let im = f4.images(&w3_f_generator(1));
        let a = |i: usize| f4.free_gen(i);
        assert_eq!(im.free[0], f4.invert(&a(1)));
        assert_eq!(im.free[3], f4.product([&f4.invert(&a(1)), &a(4), &a(1)]));
        assert_eq!(im.free[1], a(2));
        assert_eq!(im.free[2], a(3));
        // f(x_1 x_2) is not inner
        let im = w3_f(&f4, &[1, 2], &[1, 2, 3]);
        assert_eq!(im.free[3], f4.product([&f4.invert(&a(2)), &f4.invert(&a(1)), &a(4), &a(1), &a(2)]));
        assert!(f4.is_inner(&im).is_none());
    }

    #[test]
    fn w3_normal_form_counts() {
        let counts: Vec<usize> = (0..=4).map(|k| w3_normal_forms(k).len()).collect();
        assert_eq!(counts, vec![1, 4, 10, 22, 46]);
    }

    #[test]
    fn w3_report_passes() {
        let rep = w3_into_out_f4(3);
        assert!(rep.passed(), "{:?}", rep.inner);
        assert_eq!(rep.equivariance.len(), 6);
        assert_eq!(rep.probed, 22 * 6 - 1);
    }
}
