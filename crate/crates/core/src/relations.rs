//! The presentation relations of `Aut(G)` and `Out(G)`, enumerated over all
//! admissible indices and verified extensionally.
//!
//! Families `1..=11` concern factor automorphisms `φ`, permutations `ω` and
//! Dehn twists `α`; `12` is the Nielsen list for the free part; `13..=23` mix
//! reflections `τ` and transvections `ρ`, `λ` with the rest; `0` is the extra
//! relator of `Out(G)`, which equals `ad(γ_i^{-1})` in `Aut(G)`.
//!
//! `φ` ranges over non-identity automorphisms of finite factors only. For an
//! abelian factor the `φ_i` of relations `0` and `21` restricts to `ad(γ_i^{-1})`
//! on `G_i`, which is the identity, so it is omitted.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::automorphism::{AutWord, GenAut, Letter};
use crate::group::{GroupSpec, Payload, SubgroupSpec, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    /// `lhs = rhs` in `Aut(G)`.
    Exact,
    /// `lhs = ad(g) ∘ rhs` for some `g ∈ G`.
    ModInn,
    /// `lhs = ad(g) ∘ rhs` for some `g ∈ N`.
    ModInnN,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationInstance {
    pub family: u8,
    pub label: String,
    pub indices: Vec<usize>,
    pub gammas: Vec<Word>,
    pub lhs: AutWord,
    pub rhs: AutWord,
    pub level: Level,
    pub predicted: Option<Word>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub family: u8,
    pub label: String,
    pub indices: Vec<usize>,
    pub level: Level,
    pub holds_exact: bool,
    pub conjugator: Option<Word>,
    pub conjugator_in_n: Option<bool>,
    pub matches_predicted: Option<bool>,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationSuite {
    pub instances: Vec<RelationInstance>,
    pub skipped: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySummary {
    pub family: u8,
    pub level: Level,
    pub total: usize,
    pub passed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationSummary {
    pub families: Vec<FamilySummary>,
    pub total: usize,
    pub passed: usize,
    pub skipped: Vec<String>,
}

impl RelationSummary {
    pub fn all_passed(&self) -> bool {
        self.total == self.passed
    }
}

pub fn summarize(reports: &[RelationReport], skipped: &[String]) -> RelationSummary {
    let mut map: BTreeMap<(u8, Level), (usize, usize)> = BTreeMap::new();
    for r in reports {
        let e = map.entry((r.family, r.level)).or_default();
        e.0 += 1;
        e.1 += usize::from(r.passed);
    }
    RelationSummary {
        families: map
            .into_iter()
            .map(|((family, level), (total, passed))| FamilySummary { family, level, total, passed })
            .collect(),
        total: reports.len(),
        passed: reports.iter().filter(|r| r.passed).count(),
        skipped: skipped.to_vec(),
    }
}

fn w(letters: &[(GenAut, i8)]) -> AutWord {
    AutWord::from_letters(letters.iter().map(|(g, s)| Letter::new(g.clone(), *s)).collect())
}

struct Builder<'a> {
    g: &'a GroupSpec,
    out: Vec<RelationInstance>,
}

impl Builder<'_> {
    fn push(&mut self, family: u8, indices: Vec<usize>, gammas: Vec<Word>, lhs: AutWord, rhs: AutWord) {
        let label = format!("({family}) {} = {}", lhs.label(), rhs.label());
        self.out.push(RelationInstance {
            family,
            label,
            indices,
            gammas,
            lhs,
            rhs,
            level: Level::Exact,
            predicted: None,
        });
    }

    fn gw(&self, i: usize, p: &Payload) -> Word {
        self.g.element(i, p.clone()).expect("γ valid by construction")
    }
}

/// All instances of the relation families for `G`, exhaustively over indices
/// and over the `γ` choices of [`GroupSpec::gamma_choices`].
pub fn enumerate_relations(g: &GroupSpec) -> RelationSuite {
    let d = g.free_rank;
    let pos: Vec<usize> = g.positions().collect();
    let fin: Vec<usize> = pos.iter().copied().filter(|&p| p > d).collect();
    let free: Vec<usize> = (1..=d).collect();
    let iso = |i: usize, j: usize| i != j && g.isomorphic_positions(i, j);
    let phis = |i: usize| g.factor_auts(i);
    let gam = |i: usize| g.gamma_choices(i);
    let a = |i: usize, j: usize, p: &Payload| GenAut::dehn_twist(i, j, p.clone());
    let rho = |i: usize, j: usize, p: &Payload| GenAut::right_transvection(i, j, p.clone());
    let lam = |i: usize, j: usize, p: &Payload| GenAut::left_transvection(i, j, p.clone());
    let om = GenAut::permutation;
    let tau = GenAut::reflection;
    let mut b = Builder { g, out: Vec::new() };

    // (1) φ_i φ_j = φ_j φ_i
    for &i in &fin {
        for &j in fin.iter().filter(|&&j| j > i) {
            for pi in phis(i) {
                for pj in phis(j) {
                    b.push(1, vec![i, j], vec![], w(&[(pi.clone(), 1), (pj.clone(), 1)]), w(&[(pj, 1), (pi.clone(), 1)]));
                }
            }
        }
    }
    // (2) φ_i α_jk = α_jk φ_i, i ≠ j
    for &i in &fin {
        for &j in pos.iter().filter(|&&j| j != i) {
            for &k in fin.iter().filter(|&&k| k != j) {
                for pi in phis(i) {
                    for gj in gam(j) {
                        let t = a(j, k, &gj);
                        b.push(2, vec![i, j, k], vec![b.gw(j, &gj)], w(&[(pi.clone(), 1), (t.clone(), 1)]), w(&[(t, 1), (pi.clone(), 1)]));
                    }
                }
            }
        }
    }
    // (3) φ_i α_ik^(γ) = α_ik^(φγ) φ_i
    for &i in &fin {
        let f = g.factor(i).unwrap();
        for &k in pos.iter().filter(|&&k| k != i && k > d) {
            for pi in phis(i) {
                let GenAut::FactorAut { matrix, .. } = &pi else { unreachable!() };
                for gi in gam(i) {
                    let Payload::Finite(v) = &gi else { unreachable!() };
                    let phg = Payload::Finite(f.apply_matrix(matrix, v));
                    b.push(
                        3,
                        vec![i, k],
                        vec![b.gw(i, &gi)],
                        w(&[(pi.clone(), 1), (a(i, k, &gi), 1)]),
                        w(&[(a(i, k, &phg), 1), (pi.clone(), 1)]),
                    );
                }
            }
        }
    }
    // (4) α_ij α_kl = α_kl α_ij, k ≠ j, l ∉ {i, j}
    for &i in &pos {
        for &j in fin.iter().filter(|&&j| j != i) {
            for &k in pos.iter().filter(|&&k| k != j) {
                for &l in fin.iter().filter(|&&l| l != k && l != i && l != j) {
                    for gi in gam(i) {
                        for gk in gam(k) {
                            let (s, t) = (a(i, j, &gi), a(k, l, &gk));
                            b.push(
                                4,
                                vec![i, j, k, l],
                                vec![b.gw(i, &gi), b.gw(k, &gk)],
                                w(&[(s.clone(), 1), (t.clone(), 1)]),
                                w(&[(t, 1), (s, 1)]),
                            );
                        }
                    }
                }
            }
        }
    }
    // (5) α_ki α_ij α_ki^{-1} = α_kj^{-1} α_ij α_kj
    for &i in &fin {
        for &j in fin.iter().filter(|&&j| j != i) {
            for &k in pos.iter().filter(|&&k| k != i && k != j) {
                for gi in gam(i) {
                    for gk in gam(k) {
                        let (aki, aij, akj) = (a(k, i, &gk), a(i, j, &gi), a(k, j, &gk));
                        b.push(
                            5,
                            vec![i, j, k],
                            vec![b.gw(i, &gi), b.gw(k, &gk)],
                            w(&[(aki.clone(), 1), (aij.clone(), 1), (aki, -1)]),
                            w(&[(akj.clone(), -1), (aij, 1), (akj, 1)]),
                        );
                    }
                }
            }
        }
    }
    // (6) ω_ij φ_i = φ_j ω_ij
    for &i in &fin {
        for &j in fin.iter().filter(|&&j| iso(i, j)) {
            for pi in phis(i) {
                let GenAut::FactorAut { matrix, .. } = &pi else { unreachable!() };
                let pj = GenAut::FactorAut { position: j, matrix: matrix.clone() };
                b.push(6, vec![i, j], vec![], w(&[(om(i, j), 1), (pi.clone(), 1)]), w(&[(pj, 1), (om(i, j), 1)]));
            }
        }
    }
    // (7) ω_ij φ_k = φ_k ω_ij
    for &i in &pos {
        for &j in pos.iter().filter(|&&j| j > i && iso(i, j)) {
            for &k in fin.iter().filter(|&&k| k != i && k != j) {
                for pk in phis(k) {
                    b.push(7, vec![i, j, k], vec![], w(&[(om(i, j), 1), (pk.clone(), 1)]), w(&[(pk, 1), (om(i, j), 1)]));
                }
            }
        }
    }
    // ω_ij identifies coordinates, so ωγ carries the same payload
    // (8) ω_ij α_ij^(γ) = α_ji^(ωγ) ω_ij
    for &i in &fin {
        for &j in fin.iter().filter(|&&j| iso(i, j)) {
            for gi in gam(i) {
                b.push(
                    8,
                    vec![i, j],
                    vec![b.gw(i, &gi)],
                    w(&[(om(i, j), 1), (a(i, j, &gi), 1)]),
                    w(&[(a(j, i, &gi.clone()), 1), (om(i, j), 1)]),
                );
            }
        }
    }
    // (9) ω_ij α_ik^(γ) = α_jk^(ωγ) ω_ij
    for &i in &pos {
        for &j in pos.iter().filter(|&&j| iso(i, j)) {
            for &k in fin.iter().filter(|&&k| k != i && k != j) {
                for gi in gam(i) {
                    b.push(
                        9,
                        vec![i, j, k],
                        vec![b.gw(i, &gi)],
                        w(&[(om(i, j), 1), (a(i, k, &gi), 1)]),
                        w(&[(a(j, k, &gi.clone()), 1), (om(i, j), 1)]),
                    );
                }
            }
        }
    }
    // (10) ω_ij α_ki = α_kj ω_ij
    for &i in &fin {
        for &j in fin.iter().filter(|&&j| iso(i, j)) {
            for &k in pos.iter().filter(|&&k| k != i && k != j) {
                for gk in gam(k) {
                    b.push(
                        10,
                        vec![i, j, k],
                        vec![b.gw(k, &gk)],
                        w(&[(om(i, j), 1), (a(k, i, &gk), 1)]),
                        w(&[(a(k, j, &gk), 1), (om(i, j), 1)]),
                    );
                }
            }
        }
    }
    // (11) ω_ij α_kl = α_kl ω_ij, k, l ∉ {i, j}
    for &i in &pos {
        for &j in pos.iter().filter(|&&j| j > i && iso(i, j)) {
            for &k in pos.iter().filter(|&&k| k != i && k != j) {
                for &l in fin.iter().filter(|&&l| l != i && l != j && l != k) {
                    for gk in gam(k) {
                        let t = a(k, l, &gk);
                        b.push(11, vec![i, j, k, l], vec![b.gw(k, &gk)], w(&[(om(i, j), 1), (t.clone(), 1)]), w(&[(t, 1), (om(i, j), 1)]));
                    }
                }
            }
        }
    }

    let mut skipped = Vec::new();
    if d == 0 {
        skipped.push("families 12-23 need a free factor (d = 0)".to_string());
    } else {
        if d >= 2 {
            b.out.extend(nielsen_relation_suite(d));
        } else {
            skipped.push("family 12 needs free rank at least 2".to_string());
        }
        // (13) α_ij τ_k = τ_k α_ij, k ∉ {i, j}
        for &k in &free {
            for &i in pos.iter().filter(|&&i| i != k) {
                for &j in fin.iter().filter(|&&j| j != i) {
                    for gi in gam(i) {
                        let t = a(i, j, &gi);
                        b.push(13, vec![i, j, k], vec![b.gw(i, &gi)], w(&[(t.clone(), 1), (tau(k), 1)]), w(&[(tau(k), 1), (t, 1)]));
                    }
                }
            }
        }
        // (14) α_ij τ_i = τ_i α_ij^{-1}
        for &i in &free {
            for &j in &fin {
                for gi in gam(i) {
                    let t = a(i, j, &gi);
                    b.push(14, vec![i, j], vec![b.gw(i, &gi)], w(&[(t.clone(), 1), (tau(i), 1)]), w(&[(tau(i), 1), (t, -1)]));
                }
            }
        }
        // (15) ρ_ij φ_k = φ_k ρ_ij, k ≠ i
        for &j in &free {
            for &i in pos.iter().filter(|&&i| i != j) {
                for &k in fin.iter().filter(|&&k| k != i) {
                    for pk in phis(k) {
                        for gi in gam(i) {
                            let t = rho(i, j, &gi);
                            b.push(15, vec![i, j, k], vec![b.gw(i, &gi)], w(&[(t.clone(), 1), (pk.clone(), 1)]), w(&[(pk.clone(), 1), (t, 1)]));
                        }
                    }
                }
            }
        }
        // (16) ρ_ij^(φγ) φ_i = φ_i ρ_ij^(γ)
        for &j in &free {
            for &i in &fin {
                let f = g.factor(i).unwrap();
                for pi in phis(i) {
                    let GenAut::FactorAut { matrix, .. } = &pi else { unreachable!() };
                    for gi in gam(i) {
                        let Payload::Finite(v) = &gi else { unreachable!() };
                        let phg = Payload::Finite(f.apply_matrix(matrix, v));
                        b.push(
                            16,
                            vec![i, j],
                            vec![b.gw(i, &gi)],
                            w(&[(rho(i, j, &phg), 1), (pi.clone(), 1)]),
                            w(&[(pi.clone(), 1), (rho(i, j, &gi), 1)]),
                        );
                    }
                }
            }
        }
        // (17) ρ_ij α_kl = α_kl ρ_ij, {k, l} ∩ {i, j} = ∅
        for &j in &free {
            for &i in pos.iter().filter(|&&i| i != j) {
                for &k in pos.iter().filter(|&&k| k != i && k != j) {
                    for &l in fin.iter().filter(|&&l| l != i && l != j && l != k) {
                        for gi in gam(i) {
                            for gk in gam(k) {
                                let (s, t) = (rho(i, j, &gi), a(k, l, &gk));
                                b.push(
                                    17,
                                    vec![i, j, k, l],
                                    vec![b.gw(i, &gi), b.gw(k, &gk)],
                                    w(&[(s.clone(), 1), (t.clone(), 1)]),
                                    w(&[(t, 1), (s, 1)]),
                                );
                            }
                        }
                    }
                }
            }
        }
        // (18) ρ_ij^(γ) α_il^(γ) = α_il^(γ) ρ_ij^(γ)
        for &j in &free {
            for &i in pos.iter().filter(|&&i| i != j) {
                for &l in fin.iter().filter(|&&l| l != i) {
                    for gi in gam(i) {
                        let (s, t) = (rho(i, j, &gi), a(i, l, &gi));
                        b.push(18, vec![i, j, l], vec![b.gw(i, &gi)], w(&[(s.clone(), 1), (t.clone(), 1)]), w(&[(t, 1), (s, 1)]));
                    }
                }
            }
        }
        // (19) ρ_ij^(γ) α_jl = α_jl ρ_ij^(γ) α_il^(γ)
        for &j in &free {
            for &i in pos.iter().filter(|&&i| i != j) {
                for &l in fin.iter().filter(|&&l| l != i) {
                    for gi in gam(i) {
                        let ajl = a(j, l, &Payload::Free(1));
                        b.push(
                            19,
                            vec![i, j, l],
                            vec![b.gw(i, &gi)],
                            w(&[(rho(i, j, &gi), 1), (ajl.clone(), 1)]),
                            w(&[(ajl, 1), (rho(i, j, &gi), 1), (a(i, l, &gi), 1)]),
                        );
                    }
                }
            }
        }
        // (20) ρ_kj^{-1} ρ_ij ρ_kj α_ki = α_ki ρ_ij
        for &j in &free {
            for &i in &fin {
                for &k in pos.iter().filter(|&&k| k != i && k != j) {
                    for gi in gam(i) {
                        for gk in gam(k) {
                            let (rkj, rij, aki) = (rho(k, j, &gk), rho(i, j, &gi), a(k, i, &gk));
                            b.push(
                                20,
                                vec![i, j, k],
                                vec![b.gw(i, &gi), b.gw(k, &gk)],
                                w(&[(rkj.clone(), -1), (rij.clone(), 1), (rkj, 1), (aki.clone(), 1)]),
                                w(&[(aki, 1), (rij, 1)]),
                            );
                        }
                    }
                }
            }
        }
        // (21) α_ji ρ_ij^(γ) = λ_ij^(γ) α_ji
        for &j in &free {
            for &i in &fin {
                for gi in gam(i) {
                    let aji = a(j, i, &Payload::Free(1));
                    b.push(
                        21,
                        vec![i, j],
                        vec![b.gw(i, &gi)],
                        w(&[(aji.clone(), 1), (rho(i, j, &gi), 1)]),
                        w(&[(lam(i, j, &gi), 1), (aji, 1)]),
                    );
                }
            }
        }
        // (22) τ_k φ_i = φ_i τ_k
        for &k in &free {
            for &i in &fin {
                for pi in phis(i) {
                    b.push(22, vec![i, k], vec![], w(&[(tau(k), 1), (pi.clone(), 1)]), w(&[(pi, 1), (tau(k), 1)]));
                }
            }
        }
        // (23) τ_i ω_kl = ω_kl τ_i, i ∉ {k, l}
        for &i in &free {
            for &k in pos.iter().filter(|&&k| k != i) {
                for &l in pos.iter().filter(|&&l| l > k && l != i && iso(k, l)) {
                    b.push(23, vec![i, k, l], vec![], w(&[(tau(i), 1), (om(k, l), 1)]), w(&[(om(k, l), 1), (tau(i), 1)]));
                }
            }
        }
    }

    // (0) φ_i ∏_{j≤d} ρ_ij (λ_ij)^{-1} ∏_{j>d} α_ij = 1, equal to ad(γ_i^{-1})
    for &i in &pos {
        for gi in gam(i) {
            let mut letters = Vec::new();
            for &j in free.iter().filter(|&&j| j != i) {
                letters.push((rho(i, j, &gi), 1));
                letters.push((lam(i, j, &gi), -1));
            }
            for &j in fin.iter().filter(|&&j| j != i) {
                letters.push((a(i, j, &gi), 1));
            }
            let gw = b.gw(i, &gi);
            let lhs = w(&letters);
            let label = format!("(0) {} = 1", lhs.label());
            b.out.push(RelationInstance {
                family: 0,
                label,
                indices: vec![i],
                gammas: vec![gw.clone()],
                lhs,
                rhs: AutWord::identity(),
                level: Level::ModInn,
                predicted: Some(g.invert(&gw)),
            });
        }
    }
    RelationSuite { instances: b.out, skipped }
}

/// Nielsen's relations among `ρ_ij = ρ_ij^(a_i)`, `λ_ij`, `τ_i`, `ω_ij` on the
/// free positions `1..=d`:
///
/// - `τ_i² = 1`, `ω_ij² = 1`, `τ_i τ_j = τ_j τ_i`, `ω_ij τ_i ω_ij = τ_j`
/// - `ω_ij ρ_ij ω_ij = ρ_ji`, `ω_ij λ_ij ω_ij = λ_ji`
/// - `τ_i ρ_ij τ_i = ρ_ij^{-1}`, `τ_j ρ_ij τ_j = λ_ij^{-1}`
/// - `ρ_ij λ_kj = λ_kj ρ_ij`
/// - `ρ_ij ρ_kl`, `λ_ij λ_kl`, `ρ_ij λ_kl` commute when `j ≠ l`, `j ≠ k`, `l ≠ i`
/// - `ρ_jk^{-1} ρ_ij^{-1} ρ_jk ρ_ij = ρ_ik^{-1}` and the same with `λ`
/// - `ρ_ij λ_ji^{-1} ρ_ij = ρ_ij λ_ij^{-1} ω_ij τ_i`
///
/// Every member is checked extensionally by [`verify_relation`].
pub fn nielsen_relation_suite(d: usize) -> Vec<RelationInstance> {
    if d < 2 {
        return Vec::new();
    }
    let one = Payload::Free(1);
    let rho = |i: usize, j: usize| GenAut::right_transvection(i, j, one.clone());
    let lam = |i: usize, j: usize| GenAut::left_transvection(i, j, one.clone());
    let om = GenAut::permutation;
    let tau = GenAut::reflection;
    let idx: Vec<usize> = (1..=d).collect();
    let mut out = Vec::new();
    let mut push = |indices: Vec<usize>, lhs: AutWord, rhs: AutWord| {
        let label = format!("(12) {} = {}", lhs.label(), rhs.label());
        out.push(RelationInstance {
            family: 12,
            label,
            indices,
            gammas: vec![],
            lhs,
            rhs,
            level: Level::Exact,
            predicted: None,
        });
    };
    let id = AutWord::identity;

    for &i in &idx {
        push(vec![i], w(&[(tau(i), 1), (tau(i), 1)]), id());
    }
    for &i in &idx {
        for &j in idx.iter().filter(|&&j| j > i) {
            push(vec![i, j], w(&[(om(i, j), 1), (om(i, j), 1)]), id());
            push(vec![i, j], w(&[(tau(i), 1), (tau(j), 1)]), w(&[(tau(j), 1), (tau(i), 1)]));
        }
    }
    for &i in &idx {
        for &j in idx.iter().filter(|&&j| j != i) {
            push(vec![i, j], w(&[(om(i, j), 1), (tau(i), 1), (om(i, j), 1)]), w(&[(tau(j), 1)]));
            push(vec![i, j], w(&[(om(i, j), 1), (rho(i, j), 1), (om(i, j), 1)]), w(&[(rho(j, i), 1)]));
            push(vec![i, j], w(&[(om(i, j), 1), (lam(i, j), 1), (om(i, j), 1)]), w(&[(lam(j, i), 1)]));
            push(vec![i, j], w(&[(tau(i), 1), (rho(i, j), 1), (tau(i), 1)]), w(&[(rho(i, j), -1)]));
            push(vec![i, j], w(&[(tau(j), 1), (rho(i, j), 1), (tau(j), 1)]), w(&[(lam(i, j), -1)]));
            push(
                vec![i, j],
                w(&[(rho(i, j), 1), (lam(j, i), -1), (rho(i, j), 1)]),
                w(&[(rho(i, j), 1), (lam(i, j), -1), (om(i, j), 1), (tau(i), 1)]),
            );
            for &k in idx.iter().filter(|&&k| k != j) {
                push(
                    vec![i, j, k],
                    w(&[(rho(i, j), 1), (lam(k, j), 1)]),
                    w(&[(lam(k, j), 1), (rho(i, j), 1)]),
                );
            }
        }
    }
    for &i in &idx {
        for &j in idx.iter().filter(|&&j| j != i) {
            for &k in &idx {
                for &l in idx.iter().filter(|&&l| l != k && l != j && l != i && k != j) {
                    for (s, t) in [(rho(i, j), rho(k, l)), (lam(i, j), lam(k, l)), (rho(i, j), lam(k, l))] {
                        push(
                            vec![i, j, k, l],
                            w(&[(s.clone(), 1), (t.clone(), 1)]),
                            w(&[(t, 1), (s, 1)]),
                        );
                    }
                }
            }
        }
    }
    for &i in &idx {
        for &j in idx.iter().filter(|&&j| j != i) {
            for &k in idx.iter().filter(|&&k| k != i && k != j) {
                push(
                    vec![i, j, k],
                    w(&[(rho(j, k), -1), (rho(i, j), -1), (rho(j, k), 1), (rho(i, j), 1)]),
                    w(&[(rho(i, k), -1)]),
                );
                push(
                    vec![i, j, k],
                    w(&[(lam(j, k), -1), (lam(i, j), -1), (lam(j, k), 1), (lam(i, j), 1)]),
                    w(&[(lam(i, k), -1)]),
                );
            }
        }
    }
    out
}

/// Evaluates `lhs ∘ rhs^{-1}` and classifies it.
pub fn verify_relation(g: &GroupSpec, inst: &RelationInstance, n: &SubgroupSpec) -> RelationReport {
    let d = inst.lhs.compose(&inst.rhs.inverse());
    let im = g.images(&d);
    let holds_exact = im == g.identity_images();
    let conjugator = if holds_exact { Some(Word::identity()) } else { g.is_inner(&im) };
    let conjugator_in_n = conjugator.as_ref().map(|c| g.in_subgroup(c, n));
    let matches_predicted = match (&inst.predicted, &conjugator) {
        (Some(p), Some(c)) => Some(g.same_inner(p, c)),
        (Some(_), None) => Some(false),
        _ => None,
    };
    let passed = match inst.level {
        Level::Exact => holds_exact,
        Level::ModInn => conjugator.is_some() && matches_predicted != Some(false),
        Level::ModInnN => conjugator_in_n == Some(true) && matches_predicted != Some(false),
    };
    RelationReport {
        family: inst.family,
        label: inst.label.clone(),
        indices: inst.indices.clone(),
        level: inst.level,
        holds_exact,
        conjugator,
        conjugator_in_n,
        matches_predicted,
        passed,
    }
}

/// Verifies instances in parallel; reports keep the input order.
pub fn verify_all(g: &GroupSpec, instances: &[RelationInstance], n: &SubgroupSpec) -> Vec<RelationReport> {
    instances.par_iter().map(|inst| verify_relation(g, inst, n)).collect()
}
