//! The van Kampen rule: a monodromy table presents the fundamental group of
//! the curve complement. Every factor braid contributes the relators
//! `image·preimage⁻¹` over all fiber generators; the projective relation
//! kills the descending product of all generators.
//!
//! The pipeline runs on the descending Artin convention (the single global
//! convention switch): under it, the built-in tables reproduce the
//! published relation lists, and the projective relator `x_p ⋯ x_1` is
//! literally fixed by every factor's action.

use crate::braid::{ArtinConvention, Braid};
use crate::monodromy::{tangency_relations, MonodromyTable, SingularFactor};
use crate::presentation::Presentation;
use crate::word::FreeWord;

/// The convention the presenter applies braids with. Flipping this (plus
/// the projective orientation below) mirrors every table; Descending is
/// calibrated against the published 𝒜₂ list.
pub const VAN_KAMPEN_CONVENTION: ArtinConvention = ArtinConvention::Descending;

/// Orientation of the projective relator, `x_p ⋯ x_1` by default (as the
/// tables print it). The ascending variant exists because the choice
/// interacts with the Artin convention.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ProjectiveOrientation {
    Descending,
    Ascending,
}

/// Relators of one factor braid: the freely and cyclically reduced words
/// `apply(b, x_i) · x_i⁻¹`, deduplicated, trivial ones dropped.
pub fn relations_from_factor(b: &Braid) -> Vec<FreeWord> {
    let mut out: Vec<FreeWord> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for g in 1..=b.strands() {
        let x = FreeWord::gen(g);
        let image = b.apply_in(VAN_KAMPEN_CONVENTION, &x).expect("generator in range");
        let relator = image.mul(&x.inverse()).cyclic_reduce();
        if relator.is_identity() {
            continue;
        }
        if seen.insert(relator.canonical_cyclic()) {
            out.push(relator);
        }
    }
    out
}

/// The presentation of the complement: generators x1..xp, the union of the
/// factor relators, and (if the table says so) the projective relator.
pub fn present(table: &MonodromyTable) -> Presentation {
    present_oriented(table, ProjectiveOrientation::Descending)
}

pub fn present_oriented(table: &MonodromyTable, orientation: ProjectiveOrientation) -> Presentation {
    table.validate().expect("valid table");
    let p = table.points;
    let mut relators: Vec<FreeWord> = Vec::new();
    for factor in &table.factors {
        relators.extend(relations_from_factor(&factor.braid(p)));
    }
    if table.include_projective {
        relators.push(match orientation {
            ProjectiveOrientation::Descending => FreeWord::descending_product(p),
            ProjectiveOrientation::Ascending => FreeWord::ascending_product(p),
        });
    }
    let symbols = (1..=p).map(|i| format!("x{i}")).collect();
    let mut pres = Presentation::new(symbols, relators);
    pres.meta = table.meta.clone();
    pres.meta.insert("source".into(), "braid".into());
    pres
}

/// The per-type relation templates (branch `u = v`, node `[u, v] = e`,
/// tangency `(uv)^m = (vu)^m`), evaluated on the transported meridian
/// endpoints. A cross-check path only; `present` uses the uniform rule.
pub fn template_relations(factor: &SingularFactor, points: u32) -> Option<Vec<FreeWord>> {
    let conv = VAN_KAMPEN_CONVENTION;
    if let Some(tw) = factor.half_twist(points) {
        let transport = factor.conjugator.mul(&tw.conjugator);
        let u = transport.apply_in(conv, &FreeWord::gen(tw.index)).unwrap();
        let v = transport.apply_in(conv, &FreeWord::gen(tw.index + 1)).unwrap();
        let rels = match factor.epsilon {
            1 => vec![u.mul(&v.inverse())],
            2 => vec![u.commutator(&v)],
            4 => tangency_relations(&[u, v], 2),
            8 => tangency_relations(&[u, v], 4),
            _ => return None,
        };
        Some(rels)
    } else {
        let (lo, hi) = factor.skeleton;
        let gens: Vec<FreeWord> = (lo..=hi)
            .map(|g| factor.conjugator.apply_in(conv, &FreeWord::gen(g)).unwrap())
            .collect();
        match factor.epsilon {
            4 => Some(tangency_relations(&gens, 2)),
            8 => Some(tangency_relations(&gens, 4)),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{fulltwist, FullTwistSpec};
    use crate::invariants::{default_battery, fingerprint, DEFAULT_HOM_CAP};
    use crate::monodromy::builtin_table;

    fn fp(p: &Presentation) -> crate::invariants::Fingerprint {
        fingerprint(p, &default_battery(), DEFAULT_HOM_CAP).unwrap()
    }

    #[test]
    fn identity_braid_gives_no_relations() {
        let b = Braid::identity(4);
        assert!(relations_from_factor(&b).is_empty());
    }

    #[test]
    fn tangency_factor_presents_braid_relation_square() {
        // σ3⁴ in B4: relators generate the closure of (34)² = (43)².
        let b = Braid::sigma(4, 3, 4);
        let rels = relations_from_factor(&b);
        assert!(!rels.is_empty());
        let via_rule = Presentation::new(
            (1..=4).map(|i| format!("x{i}")).collect(),
            rels,
        );
        let template = FreeWord::gen(3)
            .mul(&FreeWord::gen(4))
            .pow(2)
            .mul(&FreeWord::gen(4).mul(&FreeWord::gen(3)).pow(2).inverse());
        let via_template = Presentation::new(
            (1..=4).map(|i| format!("x{i}")).collect(),
            vec![template],
        );
        assert_eq!(fp(&via_rule), fp(&via_template));
    }

    #[test]
    fn branch_factor_identifies_meridians() {
        // σ1 in B2: same normal closure as {x1 x2⁻¹}.
        let b = Braid::sigma(2, 1, 1);
        let rels = relations_from_factor(&b);
        let via_rule = Presentation::new(vec!["x1".into(), "x2".into()], rels);
        let direct = Presentation::new(
            vec!["x1".into(), "x2".into()],
            vec![FreeWord::gen(1).mul(&FreeWord::gen(2).inverse())],
        );
        assert_eq!(fp(&via_rule), fp(&direct));
    }

    #[test]
    fn empty_table_single_point_is_trivial_group() {
        let table = MonodromyTable::new(1, vec![]);
        let p = present(&table);
        assert_eq!(p.num_gens(), 1);
        assert_eq!(p.relators().len(), 1);
        let simplified = p.simplified();
        assert_eq!(simplified.num_gens(), 0);
    }

    #[test]
    fn projective_word_is_fixed_by_every_builtin_factor() {
        for case in ["a2", "b2", "c2", "c3"] {
            let t = builtin_table(case).unwrap();
            let prod = FreeWord::descending_product(t.points);
            for f in &t.factors {
                let img = f
                    .braid(t.points)
                    .apply_in(VAN_KAMPEN_CONVENTION, &prod)
                    .unwrap();
                assert_eq!(img, prod, "case {case}, factor {f:?}");
            }
        }
    }

    #[test]
    fn template_matches_uniform_rule_for_fulltwist_blocks() {
        // Relators from a full twist (power 1 / 2) on k adjacent strands
        // equal the tangency relations with multiplicity 2 / 4, for k ≤ 4.
        for k in 2..=4u32 {
            for (power, mult) in [(1u32, 2u8), (2, 4)] {
                let b = fulltwist(FullTwistSpec::new(k, 1, k, power));
                let rels = relations_from_factor(&b);
                let via_rule = Presentation::new(
                    (1..=k).map(|i| format!("x{i}")).collect(),
                    rels,
                );
                let gens: Vec<FreeWord> = (1..=k).map(FreeWord::gen).collect();
                let via_template = Presentation::new(
                    (1..=k).map(|i| format!("x{i}")).collect(),
                    tangency_relations(&gens, mult),
                );
                assert_eq!(fp(&via_rule), fp(&via_template), "k={k}, power={power}");
            }
        }
    }
}
