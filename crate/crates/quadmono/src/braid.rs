//! Braid words in B_p and their Artin action on free-group words.
//!
//! Braids are plain generator words (no normal form); equality questions are
//! settled through the Artin action, which is faithful. Two mirror-image
//! action conventions are provided:
//!
//! * [`ArtinConvention::Ascending`] — σ_k: x_k ↦ x_k x_{k+1} x_k⁻¹,
//!   x_{k+1} ↦ x_k. Fixes the ascending product x_1 x_2 ⋯ x_p.
//! * [`ArtinConvention::Descending`] — σ_k: x_k ↦ x_{k+1},
//!   x_{k+1} ↦ x_{k+1} x_k x_{k+1}⁻¹. Fixes the descending product
//!   x_p ⋯ x_1.
//!
//! The two differ by the mirror i ↦ p+1−i. `artin_apply` uses Ascending;
//! the monodromy pipeline flips the single global switch to Descending,
//! which is the convention under which the quadric tables reproduce their
//! published relation lists (projective relation written x_p ⋯ x_1).

use crate::word::FreeWord;
use crate::Error;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Which way σ_k acts on the free group. See the module docs.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ArtinConvention {
    Ascending,
    Descending,
}

/// A word in the Artin generators of B_p, run-length encoded.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Braid {
    strands: u32,
    word: Vec<(u32, i32)>,
}

impl Braid {
    pub fn identity(strands: u32) -> Self {
        assert!(strands >= 1);
        Braid { strands, word: Vec::new() }
    }

    /// σ_k^e in B_p. `k` ranges over 1..p−1.
    pub fn sigma(strands: u32, k: u32, e: i32) -> Self {
        let mut b = Self::identity(strands);
        b.push(k, e);
        b
    }

    pub fn from_word<I: IntoIterator<Item = (u32, i32)>>(strands: u32, iter: I) -> Self {
        let mut b = Self::identity(strands);
        for (k, e) in iter {
            b.push(k, e);
        }
        b
    }

    fn push(&mut self, k: u32, e: i32) {
        assert!(k >= 1 && k < self.strands, "artin index {k} out of range for B_{}", self.strands);
        if e == 0 {
            return;
        }
        match self.word.last_mut() {
            Some((lk, le)) if *lk == k => {
                *le += e;
                if *le == 0 {
                    self.word.pop();
                }
            }
            _ => self.word.push((k, e)),
        }
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    pub fn word(&self) -> &[(u32, i32)] {
        &self.word
    }

    pub fn is_identity_word(&self) -> bool {
        self.word.is_empty()
    }

    /// Letter length of the word (sum of |exponents|).
    pub fn len(&self) -> usize {
        self.word.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Algebraic letter sum; conjugation-invariant.
    pub fn writhe(&self) -> i64 {
        self.word.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn mul(&self, other: &Braid) -> Braid {
        assert_eq!(self.strands, other.strands, "strand counts differ");
        let mut out = self.clone();
        for &(k, e) in &other.word {
            out.push(k, e);
        }
        out
    }

    pub fn inverse(&self) -> Braid {
        Braid {
            strands: self.strands,
            word: self.word.iter().rev().map(|&(k, e)| (k, -e)).collect(),
        }
    }

    pub fn pow(&self, n: i32) -> Braid {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity(self.strands);
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    pub fn conjugate_by(&self, by: &Braid) -> Braid {
        by.mul(self).mul(&by.inverse())
    }

    /// Applies the braid to a free word under the given convention.
    ///
    /// The action is an anti-composition over the braid word read left to
    /// right: `apply(b1·b2, w) = apply(b1, apply(b2, w))`, so the rightmost
    /// letter acts first.
    pub fn apply_in(&self, conv: ArtinConvention, w: &FreeWord) -> Result<FreeWord, Error> {
        if w.max_gen() > self.strands {
            return Err(Error::GeneratorOutOfRange {
                gen: w.max_gen(),
                strands: self.strands,
            });
        }
        let mut out = w.clone();
        for &(k, e) in self.word.iter().rev() {
            let sign = e.signum();
            for _ in 0..e.unsigned_abs() {
                out = apply_letter(conv, k, sign, &out);
            }
        }
        Ok(out)
    }

    /// Convenience: the action of each generator image, `x_1..x_p`.
    pub fn images(&self, conv: ArtinConvention) -> Vec<FreeWord> {
        (1..=self.strands)
            .map(|g| self.apply_in(conv, &FreeWord::gen(g)).expect("in range"))
            .collect()
    }

    /// Two braid words are equal in B_p iff their Artin actions agree
    /// (the action is faithful).
    pub fn same_braid(&self, other: &Braid) -> bool {
        self.strands == other.strands
            && self.images(ArtinConvention::Ascending) == other.images(ArtinConvention::Ascending)
    }
}

fn apply_letter(conv: ArtinConvention, k: u32, sign: i32, w: &FreeWord) -> FreeWord {
    let image = |g: u32| -> Option<FreeWord> {
        match conv {
            ArtinConvention::Ascending => {
                // σ_k: x_k ↦ x_k x_{k+1} x_k⁻¹, x_{k+1} ↦ x_k
                if sign > 0 {
                    if g == k {
                        Some(FreeWord::gen(k + 1).conjugate(&FreeWord::gen(k)))
                    } else if g == k + 1 {
                        Some(FreeWord::gen(k))
                    } else {
                        None
                    }
                } else {
                    // σ_k⁻¹: x_k ↦ x_{k+1}, x_{k+1} ↦ x_{k+1}⁻¹ x_k x_{k+1}
                    if g == k {
                        Some(FreeWord::gen(k + 1))
                    } else if g == k + 1 {
                        Some(FreeWord::gen(k).conjugate(&FreeWord::gen_pow(k + 1, -1)))
                    } else {
                        None
                    }
                }
            }
            ArtinConvention::Descending => {
                // σ_k: x_k ↦ x_{k+1}, x_{k+1} ↦ x_{k+1} x_k x_{k+1}⁻¹
                if sign > 0 {
                    if g == k {
                        Some(FreeWord::gen(k + 1))
                    } else if g == k + 1 {
                        Some(FreeWord::gen(k).conjugate(&FreeWord::gen(k + 1)))
                    } else {
                        None
                    }
                } else {
                    // σ_k⁻¹: x_k ↦ x_k⁻¹ x_{k+1} x_k, x_{k+1} ↦ x_k
                    if g == k {
                        Some(FreeWord::gen(k + 1).conjugate(&FreeWord::gen_pow(k, -1)))
                    } else if g == k + 1 {
                        Some(FreeWord::gen(k))
                    } else {
                        None
                    }
                }
            }
        }
    };
    w.substitute(image)
}

/// Spec convention action: ascending, σ_k: x_k ↦ x_k x_{k+1} x_k⁻¹.
pub fn artin_apply(b: &Braid, w: &FreeWord) -> Result<FreeWord, Error> {
    b.apply_in(ArtinConvention::Ascending, w)
}

/// A half-twist: a conjugate of an adjacent Artin generator.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfTwist {
    pub strands: u32,
    pub index: u32,
    pub conjugator: Braid,
}

impl HalfTwist {
    pub fn new(strands: u32, index: u32, conjugator: Braid) -> Self {
        assert!(index >= 1 && index < strands);
        assert_eq!(conjugator.strands(), strands);
        HalfTwist { strands, index, conjugator }
    }

    pub fn plain(strands: u32, index: u32) -> Self {
        Self::new(strands, index, Braid::identity(strands))
    }

    /// conjugator · σ_index · conjugator⁻¹.
    pub fn to_braid(&self) -> Braid {
        self.powered(1)
    }

    /// conjugator · σ_index^e · conjugator⁻¹.
    pub fn powered(&self, e: i32) -> Braid {
        Braid::sigma(self.strands, self.index, e).conjugate_by(&self.conjugator)
    }

    /// Conjugates this half-twist by a further braid.
    pub fn conjugated(&self, by: &Braid) -> HalfTwist {
        HalfTwist::new(self.strands, self.index, by.mul(&self.conjugator))
    }
}

/// Which side of the intermediate punctures a band passes.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum BandSide {
    Below,
    Above,
}

/// The half-twist exchanging punctures `i` and `j` along a path passing
/// below (resp. above) the punctures in between. The conjugator walks `j`
/// leftward past j−1, …, i+1:
/// below = σ_{j−1} σ_{j−2} ⋯ σ_{i+1}, above = the same chain inverted.
pub fn band_generator(strands: u32, i: u32, j: u32, side: BandSide) -> Result<HalfTwist, Error> {
    if i >= j {
        return Err(Error::BadBand { i, j });
    }
    if j > strands {
        return Err(Error::GeneratorOutOfRange { gen: j, strands });
    }
    let sign = match side {
        BandSide::Below => 1,
        BandSide::Above => -1,
    };
    let conj = Braid::from_word(strands, (i + 1..j).rev().map(|k| (k, sign)));
    Ok(HalfTwist::new(strands, i, conj))
}

/// A positive full twist of a contiguous block of strands, possibly iterated.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FullTwistSpec {
    pub strands: u32,
    /// Inclusive interval [lo, hi] of punctures, lo < hi.
    pub lo: u32,
    pub hi: u32,
    /// Number of full twists Δ²; 1 is one full twist.
    pub power: u32,
}

impl FullTwistSpec {
    pub fn new(strands: u32, lo: u32, hi: u32, power: u32) -> Self {
        assert!(lo < hi && hi <= strands, "bad full twist range [{lo},{hi}] in B_{strands}");
        FullTwistSpec { strands, lo, hi, power }
    }
}

/// (Δ_{[lo..hi]})^{2·power} as a positive braid word:
/// Δ² on m strands is (σ_lo σ_{lo+1} ⋯ σ_{hi−1})^m.
pub fn fulltwist(spec: FullTwistSpec) -> Braid {
    let m = spec.hi - spec.lo + 1;
    let run: Vec<(u32, i32)> = (spec.lo..spec.hi).map(|k| (k, 1)).collect();
    let mut out = Braid::identity(spec.strands);
    for _ in 0..m * spec.power {
        out = out.mul(&Braid::from_word(spec.strands, run.iter().copied()));
    }
    out
}

/// The Garside half-twist Δ on the block [lo..hi]:
/// (σ_lo)(σ_{lo+1} σ_lo)⋯(σ_{hi−1} ⋯ σ_lo). Its square is the full twist.
pub fn garside_halftwist(strands: u32, lo: u32, hi: u32) -> Braid {
    assert!(lo < hi && hi <= strands);
    let mut out = Braid::identity(strands);
    for top in lo..hi {
        for k in (lo..=top).rev() {
            out = out.mul(&Braid::sigma(strands, k, 1));
        }
    }
    out
}

impl fmt::Debug for Braid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e[B{}]", self.strands);
        }
        let mut first = true;
        for &(k, e) in &self.word {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "s{k}")?;
            } else {
                write!(f, "s{k}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HalfTwist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HalfTwist(s{} ^ {:?})", self.index, self.conjugator)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ArtinConvention::{Ascending, Descending};

    fn x(g: u32) -> FreeWord {
        FreeWord::gen(g)
    }

    fn w(letters: &[(u32, i32)]) -> FreeWord {
        FreeWord::from_syllables(letters.iter().copied())
    }

    #[test]
    fn identity_braid_fixes_everything() {
        let b = Braid::identity(4);
        let u = w(&[(1, 1), (3, -2), (2, 1)]);
        assert_eq!(artin_apply(&b, &u).unwrap(), u);
    }

    #[test]
    fn defining_convention_ascending() {
        let s1 = Braid::sigma(2, 1, 1);
        assert_eq!(artin_apply(&s1, &x(1)).unwrap(), w(&[(1, 1), (2, 1), (1, -1)]));
        assert_eq!(artin_apply(&s1, &x(2)).unwrap(), x(1));
    }

    #[test]
    fn sigma_squared_is_conjugation_by_product() {
        // σ1² sends x1 to (x1x2) x1 (x1x2)⁻¹; cross-checked against a
        // 2-strand permutation-then-conjugation oracle: even powers of σ1
        // conjugate both generators by (x1x2)^(e/2).
        let s1sq = Braid::sigma(2, 1, 2);
        let c = w(&[(1, 1), (2, 1)]);
        assert_eq!(artin_apply(&s1sq, &x(1)).unwrap(), x(1).conjugate(&c));
        assert_eq!(artin_apply(&s1sq, &x(2)).unwrap(), x(2).conjugate(&c));
        let s1p4 = Braid::sigma(2, 1, 4);
        assert_eq!(artin_apply(&s1p4, &x(1)).unwrap(), x(1).conjugate(&c.pow(2)));
    }

    #[test]
    fn inverse_letter_is_inverse_substitution() {
        for conv in [Ascending, Descending] {
            let s = Braid::sigma(3, 1, 1);
            let si = s.inverse();
            for g in 1..=3 {
                let round = si.apply_in(conv, &s.apply_in(conv, &x(g)).unwrap()).unwrap();
                assert_eq!(round, x(g));
            }
        }
    }

    #[test]
    fn action_is_homomorphism_on_samples() {
        let b1 = Braid::from_word(4, [(1, 1), (2, -1), (3, 2)]);
        let b2 = Braid::from_word(4, [(2, 1), (1, -2)]);
        let u = w(&[(1, 1), (2, 1), (3, -1), (4, 1)]);
        for conv in [Ascending, Descending] {
            let lhs = b1.mul(&b2).apply_in(conv, &u).unwrap();
            let rhs = b1.apply_in(conv, &b2.apply_in(conv, &u).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn ascending_preserves_ascending_product() {
        let b = Braid::from_word(6, [(1, 1), (3, -2), (5, 1), (2, 3), (4, -1)]);
        let prod = FreeWord::ascending_product(6);
        assert_eq!(artin_apply(&b, &prod).unwrap(), prod);
    }

    #[test]
    fn descending_preserves_descending_product() {
        let b = Braid::from_word(6, [(1, 1), (3, -2), (5, 1), (2, 3), (4, -1)]);
        let prod = FreeWord::descending_product(6);
        assert_eq!(b.apply_in(Descending, &prod).unwrap(), prod);
    }

    #[test]
    fn out_of_range_generator_errors() {
        let b = Braid::sigma(3, 1, 1);
        assert!(artin_apply(&b, &x(4)).is_err());
    }

    #[test]
    fn halftwist_to_braid_examples() {
        // Z_{3 4} in B4 is σ3.
        let z34 = HalfTwist::plain(4, 3);
        assert_eq!(z34.to_braid(), Braid::sigma(4, 3, 1));

        // Z_{2 3} conjugated by Δ²<3,4> is σ3² σ2 σ3⁻².
        let conj = Braid::sigma(4, 3, 2);
        let t = HalfTwist::new(4, 2, conj);
        assert_eq!(
            t.to_braid(),
            Braid::from_word(4, [(3, 2), (2, 1), (3, -2)])
        );

        // Exponent 0 collapses to the identity word.
        let id = HalfTwist::plain(4, 1).powered(0);
        assert!(id.is_identity_word());
    }

    #[test]
    fn band_generator_encodings() {
        let below = band_generator(4, 3, 4, BandSide::Below).unwrap();
        assert!(below.conjugator.is_identity_word());
        assert_eq!(below.index, 3);

        let z14 = band_generator(4, 1, 4, BandSide::Below).unwrap();
        assert_eq!(z14.conjugator, Braid::from_word(4, [(3, 1), (2, 1)]));
        assert_eq!(z14.index, 1);

        let z14_above = band_generator(4, 1, 4, BandSide::Above).unwrap();
        assert_ne!(z14.to_braid(), z14_above.to_braid());
        // Both square to conjugates of σ1²: same writhe, and the squares act
        // as conjugation by the respective transported meridian pair.
        assert_eq!(z14.to_braid().pow(2).writhe(), 2);
        assert_eq!(z14_above.to_braid().pow(2).writhe(), 2);

        assert!(band_generator(4, 3, 3, BandSide::Below).is_err());
    }

    #[test]
    fn fulltwist_examples() {
        assert_eq!(
            fulltwist(FullTwistSpec::new(4, 3, 4, 2)),
            Braid::sigma(4, 3, 4)
        );
        assert_eq!(
            fulltwist(FullTwistSpec::new(2, 1, 2, 1)),
            Braid::sigma(2, 1, 2)
        );
    }

    #[test]
    fn fulltwist_of_whole_set_is_central_conjugation() {
        // Δ² on all strands acts by conjugation by the total product; under
        // the ascending convention the ascending product, exhaustively for
        // p ≤ 5.
        for p in 2..=5u32 {
            let delta2 = fulltwist(FullTwistSpec::new(p, 1, p, 1));
            let c = FreeWord::ascending_product(p);
            for g in 1..=p {
                assert_eq!(
                    artin_apply(&delta2, &x(g)).unwrap(),
                    x(g).conjugate(&c),
                    "p={p}, g={g}"
                );
            }
            let cd = FreeWord::descending_product(p);
            for g in 1..=p {
                assert_eq!(
                    delta2.apply_in(Descending, &x(g)).unwrap(),
                    x(g).conjugate(&cd),
                    "descending p={p}, g={g}"
                );
            }
        }
    }

    #[test]
    fn garside_square_is_fulltwist() {
        for p in 2..=5u32 {
            let delta = garside_halftwist(p, 1, p);
            let sq = delta.mul(&delta);
            assert!(sq.same_braid(&fulltwist(FullTwistSpec::new(p, 1, p, 1))));
        }
    }

    #[test]
    fn descending_convention_reproduces_table_relation() {
        // For the factor Z_{2 3}^{Z²_{1 2}} = σ1² σ2 σ1⁻² the identified
        // meridian pair is (ᾱ(σ1²)(x2), ᾱ(σ1²)(x3)) under the descending
        // convention: ((x2 x1) x2 (x2 x1)⁻¹, x3), the published relation
        // 3 = 2 1 2 1⁻¹ 2⁻¹.
        let conj = Braid::sigma(4, 1, 2);
        let u = conj.apply_in(Descending, &x(2)).unwrap();
        let v = conj.apply_in(Descending, &x(3)).unwrap();
        assert_eq!(u, x(2).conjugate(&w(&[(2, 1), (1, 1)])));
        assert_eq!(v, x(3));

        // And every relator of the full factor lies in (and generates) the
        // normal closure of u·v⁻¹; spot-check the x3 relator's canonical
        // class after cyclic reduction.
        let b = Braid::from_word(4, [(1, 2), (2, 1), (1, -2)]);
        let img3 = b.apply_in(Descending, &x(3)).unwrap();
        let relator = img3.mul(&x(3).inverse());
        assert_eq!(
            relator.canonical_cyclic(),
            u.mul(&v.inverse()).canonical_cyclic()
        );
    }
}
