//! Free-group words over numbered generators, stored freely reduced.
//!
//! Words are run-length encoded as `(generator, exponent)` syllables with
//! adjacent syllables always on distinct generators and no zero exponents.
//! That makes free equality a plain `==` and keeps multiplication linear.
//! Generators are 1-based indices; display names live in a separate symbol
//! table owned by whoever prints the word.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A freely reduced word in a free group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
pub struct FreeWord {
    syllables: Vec<(u32, i32)>,
}

impl FreeWord {
    /// The empty word.
    pub fn identity() -> Self {
        FreeWord { syllables: Vec::new() }
    }

    /// The single generator `x_g` (1-based).
    pub fn gen(g: u32) -> Self {
        Self::gen_pow(g, 1)
    }

    /// `x_g^e`.
    pub fn gen_pow(g: u32, e: i32) -> Self {
        assert!(g >= 1, "generator indices are 1-based");
        if e == 0 {
            Self::identity()
        } else {
            FreeWord { syllables: vec![(g, e)] }
        }
    }

    /// Builds a word from arbitrary syllables, reducing as it goes.
    pub fn from_syllables<I: IntoIterator<Item = (u32, i32)>>(iter: I) -> Self {
        let mut w = Self::identity();
        for (g, e) in iter {
            w.push_syllable(g, e);
        }
        w
    }

    fn push_syllable(&mut self, g: u32, e: i32) {
        if e == 0 {
            return;
        }
        assert!(g >= 1, "generator indices are 1-based");
        match self.syllables.last_mut() {
            Some((lg, le)) if *lg == g => {
                *le += e;
                if *le == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((g, e)),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Letter length: the sum of |exponent| over syllables.
    pub fn len(&self) -> usize {
        self.syllables.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    pub fn syllables(&self) -> &[(u32, i32)] {
        &self.syllables
    }

    /// Largest generator index mentioned, or 0 for the identity.
    pub fn max_gen(&self) -> u32 {
        self.syllables.iter().map(|&(g, _)| g).max().unwrap_or(0)
    }

    /// Single letters `(g, ±1)` in order.
    pub fn letters(&self) -> impl Iterator<Item = (u32, i32)> + '_ {
        self.syllables.iter().flat_map(|&(g, e)| {
            let sign = e.signum();
            (0..e.unsigned_abs()).map(move |_| (g, sign))
        })
    }

    pub fn inverse(&self) -> Self {
        FreeWord {
            syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    /// Freely reduced concatenation `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for &(g, e) in &other.syllables {
            out.push_syllable(g, e);
        }
        out
    }

    /// `by · self · by⁻¹`.
    pub fn conjugate(&self, by: &Self) -> Self {
        by.mul(self).mul(&by.inverse())
    }

    pub fn pow(&self, n: i32) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Commutator `[self, other] = self·other·self⁻¹·other⁻¹`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).mul(&self.inverse()).mul(&other.inverse())
    }

    /// Peels matching conjugation shells: returns a cyclically reduced word.
    pub fn cyclic_reduce(&self) -> Self {
        self.cyclic_reduce_with_conjugator().0
    }

    /// Returns `(r, c)` with `self = c · r · c⁻¹` and `r` cyclically reduced.
    pub fn cyclic_reduce_with_conjugator(&self) -> (Self, Self) {
        let mut letters: Vec<(u32, i32)> = self.letters().collect();
        let mut shell: Vec<(u32, i32)> = Vec::new();
        while letters.len() >= 2 {
            let first = letters[0];
            let last = *letters.last().unwrap();
            if first.0 == last.0 && first.1 == -last.1 {
                shell.push(first);
                letters.remove(0);
                letters.pop();
            } else {
                break;
            }
        }
        (
            Self::from_syllables(letters),
            Self::from_syllables(shell),
        )
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.syllables.first(), self.syllables.last()) {
            (Some(&(fg, fe)), Some(&(lg, le))) => {
                self.syllables.len() == 1 || fg != lg || fe.signum() == le.signum()
            }
            _ => true,
        }
    }

    /// Canonical representative of the relator class of `self`: least word,
    /// in syllable order, among all cyclic rotations of the cyclic reduction
    /// and of its inverse.
    pub fn canonical_cyclic(&self) -> Self {
        let core = self.cyclic_reduce();
        if core.is_identity() {
            return core;
        }
        let letters: Vec<(u32, i32)> = core.letters().collect();
        let inv: Vec<(u32, i32)> = letters.iter().rev().map(|&(g, e)| (g, -e)).collect();
        let mut best: Option<FreeWord> = None;
        for seq in [&letters, &inv] {
            for start in 0..seq.len() {
                let rotated = seq[start..].iter().chain(&seq[..start]).copied();
                let cand = FreeWord::from_syllables(rotated);
                if best.as_ref().map_or(true, |b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        best.unwrap()
    }

    /// Total exponent of generator `g`.
    pub fn exponent_sum(&self, g: u32) -> i64 {
        self.syllables
            .iter()
            .filter(|&&(h, _)| h == g)
            .map(|&(_, e)| e as i64)
            .sum()
    }

    /// Exponent sums for generators `1..=n`.
    pub fn exponent_vector(&self, n: u32) -> Vec<i64> {
        (1..=n).map(|g| self.exponent_sum(g)).collect()
    }

    /// Replaces every occurrence of each generator by the image word.
    /// Generators without an image are left alone.
    pub fn substitute(&self, image: impl Fn(u32) -> Option<FreeWord>) -> Self {
        let mut out = Self::identity();
        for &(g, e) in &self.syllables {
            match image(g) {
                Some(w) => out = out.mul(&w.pow(e)),
                None => out.push_syllable(g, e),
            }
        }
        out
    }

    /// Renumbers generators through `map` (e.g. after deleting generators).
    pub fn renumber(&self, map: impl Fn(u32) -> u32) -> Self {
        Self::from_syllables(self.syllables.iter().map(|&(g, e)| (map(g), e)))
    }

    /// `x_1 x_2 ⋯ x_p`.
    pub fn ascending_product(p: u32) -> Self {
        Self::from_syllables((1..=p).map(|g| (g, 1)))
    }

    /// `x_p x_{p−1} ⋯ x_1`.
    pub fn descending_product(p: u32) -> Self {
        Self::from_syllables((1..=p).rev().map(|g| (g, 1)))
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "e");
        }
        let mut first = true;
        for &(g, e) in &self.syllables {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{g}")?;
            } else {
                write!(f, "x{g}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Letter-stack reduction oracle, coded independently of the run-length
    /// representation: push letters one at a time, cancelling inverse pairs.
    fn stack_reduce(letters: &[(u32, i32)]) -> Vec<(u32, i32)> {
        let mut stack: Vec<(u32, i32)> = Vec::new();
        for &(g, e) in letters {
            let sign = e.signum();
            for _ in 0..e.unsigned_abs() {
                if let Some(&(tg, te)) = stack.last() {
                    if tg == g && te == -sign {
                        stack.pop();
                        continue;
                    }
                }
                stack.push((g, sign));
            }
        }
        stack
    }

    fn w(letters: &[(u32, i32)]) -> FreeWord {
        FreeWord::from_syllables(letters.iter().copied())
    }

    #[test]
    fn inverse_cancellation() {
        let x1 = FreeWord::gen(1);
        assert!(x1.mul(&x1.inverse()).is_identity());
    }

    #[test]
    fn no_cancellation() {
        let prod = FreeWord::gen(1).mul(&FreeWord::gen(2));
        assert_eq!(prod.syllables(), &[(1, 1), (2, 1)]);
    }

    #[test]
    fn partial_cancellation_matches_stack_oracle() {
        // (x1 x2 x1⁻¹) · (x1 x2⁻¹) → x1
        let u = w(&[(1, 1), (2, 1), (1, -1)]);
        let v = w(&[(1, 1), (2, -1)]);
        let prod = u.mul(&v);
        assert_eq!(prod, FreeWord::gen(1));
        let oracle = stack_reduce(&[(1, 1), (2, 1), (1, -1), (1, 1), (2, -1)]);
        assert_eq!(prod.letters().collect::<Vec<_>>(), oracle);
    }

    #[test]
    fn conjugate_shapes() {
        let x1 = FreeWord::gen(1);
        let x2 = FreeWord::gen(2);
        assert_eq!(x2.conjugate(&x1), w(&[(1, 1), (2, 1), (1, -1)]));
        assert_eq!(x1.conjugate(&x1), x1);
        // 2 = 4 3 4⁻¹ with renaming: conjugate(x3, x4)
        let x3 = FreeWord::gen(3);
        let x4 = FreeWord::gen(4);
        assert_eq!(x3.conjugate(&x4), w(&[(4, 1), (3, 1), (4, -1)]));
    }

    #[test]
    fn cyclic_reduce_shell() {
        let u = w(&[(1, 1), (2, 1), (1, -1)]);
        assert_eq!(u.cyclic_reduce(), FreeWord::gen(2));

        let sq = w(&[(1, 1), (2, 1), (1, 1), (2, 1)]);
        assert_eq!(sq.cyclic_reduce(), sq);

        // x2⁻¹ x1 x3 x2 → x1 x3 up to rotation
        let u = w(&[(2, -1), (1, 1), (3, 1), (2, 1)]);
        let (core, conj) = u.cyclic_reduce_with_conjugator();
        assert_eq!(core.canonical_cyclic(), w(&[(1, 1), (3, 1)]).canonical_cyclic());
        assert_eq!(core.conjugate(&conj), u);
    }

    #[test]
    fn canonical_cyclic_identifies_rotations_and_inverse() {
        let a = w(&[(1, 1), (2, 1), (1, 1), (2, 1)]);
        let b = w(&[(2, 1), (1, 1), (2, 1), (1, 1)]);
        assert_eq!(a.canonical_cyclic(), b.canonical_cyclic());
        assert_eq!(a.canonical_cyclic(), a.inverse().canonical_cyclic());
    }

    #[test]
    fn substitute_and_pow() {
        let u = w(&[(1, 2), (2, -1)]);
        // x1 ↦ x3 x4, x2 unchanged
        let image = |g: u32| (g == 1).then(|| w(&[(3, 1), (4, 1)]));
        assert_eq!(
            u.substitute(image),
            w(&[(3, 1), (4, 1), (3, 1), (4, 1), (2, -1)])
        );
        assert_eq!(u.pow(0), FreeWord::identity());
        assert_eq!(u.pow(-1), u.inverse());
        assert_eq!(u.pow(2), u.mul(&u));
    }

    #[test]
    fn exponent_sums() {
        let u = w(&[(1, 2), (2, -1), (1, -2)]);
        assert_eq!(u.exponent_sum(1), 0);
        assert_eq!(u.exponent_sum(2), -1);
        assert_eq!(u.exponent_vector(3), vec![0, -1, 0]);
    }
}
