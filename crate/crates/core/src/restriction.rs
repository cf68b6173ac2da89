//! Restriction `Aut(G) → Aut(N)` in a Schreier basis of a free `N`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::automorphism::{AutWord, GenAut, Letter};
use crate::covering::FreeBasis;
use crate::error::{Error, Result};
use crate::freegroup::{FreeGroupAut, FreeWord};
use crate::group::Word;

/// `A|_N` written in the basis: the image of basis letter `k` is the
/// rewritten `A(b_k)`.
pub fn restrict(a: &AutWord, basis: &FreeBasis) -> Result<FreeGroupAut> {
    let g = &basis.cover.group;
    g.validate_aut(a)?;
    let images = basis
        .words
        .iter()
        .map(|b| {
            basis.rewrite(&g.apply(a, b)).map_err(|e| match e {
                Error::NotInSubgroup => Error::NotCharacteristic,
                e => e,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    FreeGroupAut::new(basis.rank(), images)
}

/// True when `f ∘ h` and `h ∘ f` are both the identity.
pub fn are_inverse(f: &FreeGroupAut, h: &FreeGroupAut) -> bool {
    matches!((f.compose(h), h.compose(f)), (Ok(x), Ok(y)) if x.is_identity() && y.is_identity())
}

/// True when the restrictions of `A` and `A^{-1}` are mutually inverse.
pub fn verify_automorphism(a: &AutWord, basis: &FreeBasis) -> bool {
    match (restrict(a, basis), restrict(&a.inverse(), basis)) {
        (Ok(f), Ok(h)) => are_inverse(&f, &h),
        _ => false,
    }
}

/// The restriction of `A`, flagged as verified once its inverse checks out.
pub fn restrict_certified(a: &AutWord, basis: &FreeBasis) -> Result<FreeGroupAut> {
    let mut f = restrict(a, basis)?;
    let h = restrict(&a.inverse(), basis)?;
    f.verified = are_inverse(&f, &h);
    Ok(f)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InjectivityReport {
    pub max_len: usize,
    pub generators: usize,
    /// AutWords examined, including those trivial in `Aut(G)`.
    pub words: usize,
    /// AutWords whose images differ from the identity.
    pub nontrivial: usize,
    /// Labels of non-trivial AutWords with trivial restriction.
    pub violations: Vec<String>,
    pub skipped: Option<String>,
}

impl InjectivityReport {
    pub fn passed(&self) -> bool {
        self.skipped.is_none() && self.violations.is_empty()
    }
}

/// Searches every AutWord of length `<= max_len` in the letters `s^{±1}`,
/// `s ∈ generators`, for one that is non-trivial on `G` but trivial on `N`.
pub fn injectivity_probe(basis: &FreeBasis, generators: &[GenAut], max_len: usize) -> InjectivityReport {
    let g = &basis.cover.group;
    let mut report = InjectivityReport {
        max_len,
        generators: generators.len(),
        words: 0,
        nontrivial: 0,
        violations: Vec::new(),
        skipped: None,
    };
    if g.is_infinite_dihedral() {
        report.skipped = Some("G is Z/2 * Z/2, excluded from the injectivity lemma".into());
        return report;
    }
    let letters: Vec<Letter> =
        generators.iter().flat_map(|s| [Letter::new(s.clone(), 1), Letter::new(s.clone(), -1)]).collect();
    let mut words = vec![AutWord::identity()];
    let mut layer = vec![AutWord::identity()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                letters.iter().map(move |l| {
                    let mut v = w.letters.clone();
                    v.push(l.clone());
                    AutWord::from_letters(v)
                })
            })
            .collect();
        words.extend(layer.iter().cloned());
    }
    let identity = g.identity_images();
    let results: Vec<(bool, Option<String>)> = words
        .par_iter()
        .map(|w| {
            if g.images(w) == identity {
                return (false, None);
            }
            let bad = match restrict(w, basis) {
                Ok(f) => f.is_identity(),
                Err(_) => true,
            };
            (true, bad.then(|| w.label()))
        })
        .collect();
    report.words = words.len();
    report.nontrivial = results.iter().filter(|r| r.0).count();
    report.violations = results.into_iter().filter_map(|r| r.1).collect();
    report
}

/// `restrict(ad(n))` against conjugation by the rewritten `n`.
pub fn inner_consistent(n: &Word, basis: &FreeBasis) -> Result<bool> {
    let f = restrict(&AutWord::gen(GenAut::inner(n.clone())), basis)?;
    let c: FreeWord = basis.rewrite(n)?;
    Ok(f.is_conjugation_by(&c))
}
