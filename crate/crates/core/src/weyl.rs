//! The Weyl group of the rank 2 hyperbolic root system: the infinite
//! dihedral group `⟨r₁, r₂ | r₁² = r₂² = 1⟩`.
//!
//! Every element has exactly one canonical form among
//! `1, r₁(r₂r₁)ⁿ, r₂(r₁r₂)ⁿ, (r₁r₂)ⁿ⁺¹, (r₂r₁)ⁿ⁺¹`. Actions are evaluated in
//! closed form through the integer sequences `A_n` and `B_n`; the
//! `*_via_word` functions compose simple reflections along the reduced word
//! and serve as the independent check of those closed forms.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{CartanData, RootVec, Simple, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Shape {
    /// `1`
    Id,
    /// `r₁(r₂r₁)ⁿ`
    R1Alt,
    /// `r₂(r₁r₂)ⁿ`
    R2Alt,
    /// `(r₁r₂)ⁿ⁺¹`
    Alt12,
    /// `(r₂r₁)ⁿ⁺¹`
    Alt21,
}

/// Canonical form `(shape, n)` of a Weyl group element.
///
/// Ordered by length, then by shape (`R1Alt < R2Alt < Alt12 < Alt21`), which is
/// the summation order used by the series evaluators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylElt {
    shape: Shape,
    n: u32,
}

impl WeylElt {
    pub fn new(shape: Shape, n: u32) -> Self {
        let n = if shape == Shape::Id { 0 } else { n };
        WeylElt { shape, n }
    }

    pub fn identity() -> Self {
        WeylElt::new(Shape::Id, 0)
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn length(&self) -> usize {
        let n = self.n as usize;
        match self.shape {
            Shape::Id => 0,
            Shape::R1Alt | Shape::R2Alt => 2 * n + 1,
            Shape::Alt12 | Shape::Alt21 => 2 * n + 2,
        }
    }

    /// The alternating reduced word of length `len` starting with `start`.
    pub fn alternating(start: Simple, len: usize) -> Self {
        if len == 0 {
            return WeylElt::identity();
        }
        let n = ((len - 1) / 2) as u32;
        let shape = match (start, len % 2 == 1) {
            (Simple::One, true) => Shape::R1Alt,
            (Simple::Two, true) => Shape::R2Alt,
            (Simple::One, false) => Shape::Alt12,
            (Simple::Two, false) => Shape::Alt21,
        };
        WeylElt::new(shape, n)
    }

    /// First letter of the reduced word, `None` for the identity.
    pub fn first_letter(&self) -> Option<Simple> {
        match self.shape {
            Shape::Id => None,
            Shape::R1Alt | Shape::Alt12 => Some(Simple::One),
            Shape::R2Alt | Shape::Alt21 => Some(Simple::Two),
        }
    }

    /// Reduced word, read left to right.
    pub fn word(&self) -> Vec<Simple> {
        let Some(mut letter) = self.first_letter() else {
            return Vec::new();
        };
        let mut word = Vec::with_capacity(self.length());
        for _ in 0..self.length() {
            word.push(letter);
            letter = letter.other();
        }
        word
    }

    pub fn inverse(&self) -> Self {
        match self.shape {
            Shape::Alt12 => WeylElt::new(Shape::Alt21, self.n),
            Shape::Alt21 => WeylElt::new(Shape::Alt12, self.n),
            _ => *self,
        }
    }

    /// Canonical form of an arbitrary word, by free cancellation of `rᵢrᵢ`.
    pub fn from_word(word: &[Simple]) -> Self {
        let mut reduced: Vec<Simple> = Vec::with_capacity(word.len());
        for &letter in word {
            if reduced.last() == Some(&letter) {
                reduced.pop();
            } else {
                reduced.push(letter);
            }
        }
        match reduced.first() {
            None => WeylElt::identity(),
            Some(&start) => WeylElt::alternating(start, reduced.len()),
        }
    }

    /// Image under the diagram automorphism exchanging `r₁` and `r₂`.
    pub fn swapped(&self) -> Self {
        let shape = match self.shape {
            Shape::Id => Shape::Id,
            Shape::R1Alt => Shape::R2Alt,
            Shape::R2Alt => Shape::R1Alt,
            Shape::Alt12 => Shape::Alt21,
            Shape::Alt21 => Shape::Alt12,
        };
        WeylElt::new(shape, self.n)
    }

    /// All elements of a given length in canonical order.
    pub fn of_length(len: usize) -> Vec<WeylElt> {
        if len == 0 {
            vec![WeylElt::identity()]
        } else {
            vec![
                WeylElt::alternating(Simple::One, len),
                WeylElt::alternating(Simple::Two, len),
            ]
        }
    }
}

impl Ord for WeylElt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length()
            .cmp(&other.length())
            .then(self.shape.cmp(&other.shape))
    }
}

impl PartialOrd for WeylElt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        match self.shape {
            Shape::Id => write!(f, "1"),
            Shape::R1Alt if n == 0 => write!(f, "r1"),
            Shape::R2Alt if n == 0 => write!(f, "r2"),
            Shape::R1Alt => write!(f, "r1(r2r1)^{n}"),
            Shape::R2Alt => write!(f, "r2(r1r2)^{n}"),
            Shape::Alt12 => write!(f, "(r1r2)^{}", n + 1),
            Shape::Alt21 => write!(f, "(r2r1)^{}", n + 1),
        }
    }
}

/// All elements of length `≤ max_len`, each once, in canonical order.
pub fn enumerate(max_len: usize) -> Vec<WeylElt> {
    (0..=max_len).flat_map(WeylElt::of_length).collect()
}

/// `A_n` by the recursion `A₀ = 0, A₁ = 1, A_{n+2} = m A_{n+1} - A_n + 1`.
pub fn seq_a(m: i64, n: i64) -> Result<i128> {
    if n < 0 {
        return Err(Error::InvalidIndex { index: n });
    }
    let (mut prev, mut cur) = (0i128, 1i128);
    if n == 0 {
        return Ok(0);
    }
    for _ in 1..n {
        let next = (m as i128)
            .checked_mul(cur)
            .and_then(|v| v.checked_sub(prev))
            .and_then(|v| v.checked_add(1))
            .ok_or(Error::Overflow { what: "A_n" })?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `B_n = A_n - A_{n-1}` with `B₀ = 0`.
pub fn seq_b(m: i64, n: i64) -> Result<i128> {
    match n {
        n if n < 0 => Err(Error::InvalidIndex { index: n }),
        0 => Ok(0),
        n => Ok(seq_a(m, n)? - seq_a(m, n - 1)?),
    }
}

/// Closed form of `A_n` in terms of `γ`.
pub fn seq_a_closed(cd: &CartanData, n: u32) -> f64 {
    let g = cd.gamma();
    let n = n as i32;
    let num = g.powi(2 * n + 1) - g.powi(n) * (1.0 + g) + 1.0;
    num / (g.powi(n - 1) * (g + 1.0) * (g - 1.0).powi(2))
}

/// Closed form of `B_n` in terms of `γ`.
pub fn seq_b_closed(cd: &CartanData, n: u32) -> f64 {
    let g = cd.gamma();
    let n = n as i32;
    (g.powi(2 * n) - 1.0) / (g.powi(n - 1) * (g * g - 1.0))
}

/// Precomputed `A_n`, `B_n` for `0 ≤ n ≤ bound`: exact while they fit in
/// `i128`, and in binary64 throughout.
#[derive(Debug, Clone)]
pub struct SeqCache {
    m: i64,
    a: Vec<i128>,
    b: Vec<i128>,
    af: Vec<f64>,
    bf: Vec<f64>,
}

impl SeqCache {
    pub fn new(m: i64, bound: usize) -> Self {
        let bound = bound.max(1);
        let mut a = vec![0i128, 1];
        let mut b = vec![0i128, 1];
        while a.len() <= bound {
            let k = a.len();
            let next = (m as i128)
                .checked_mul(a[k - 1])
                .and_then(|v| v.checked_sub(a[k - 2]))
                .and_then(|v| v.checked_add(1));
            match next {
                Some(v) => {
                    b.push(v - a[k - 1]);
                    a.push(v);
                }
                None => break,
            }
        }
        let mut af: Vec<f64> = a.iter().map(|&v| v as f64).collect();
        let mut bf: Vec<f64> = b.iter().map(|&v| v as f64).collect();
        let mf = m as f64;
        while af.len() <= bound {
            let k = af.len();
            let next = mf * af[k - 1] - af[k - 2] + 1.0;
            bf.push(mf * bf[k - 1] - bf[k - 2]);
            af.push(next);
        }
        SeqCache { m, a, b, af, bf }
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn bound(&self) -> usize {
        self.af.len() - 1
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.bound() {
            Err(Error::InvalidIndex { index: n as i64 })
        } else {
            Ok(())
        }
    }

    pub fn a(&self, n: usize) -> Result<i128> {
        self.check(n)?;
        self.a.get(n).copied().ok_or(Error::Overflow { what: "A_n" })
    }

    pub fn b(&self, n: usize) -> Result<i128> {
        self.check(n)?;
        self.b.get(n).copied().ok_or(Error::Overflow { what: "B_n" })
    }

    pub fn a_f64(&self, n: usize) -> Result<f64> {
        self.check(n)?;
        Ok(self.af[n])
    }

    pub fn b_f64(&self, n: usize) -> Result<f64> {
        self.check(n)?;
        Ok(self.bf[n])
    }
}

/// Images `(w α₁, w α₂)` as coordinate pairs.
pub type Matrix<T> = [[T; 2]; 2];

/// The Weyl group of a fixed Cartan datum, with sequence tables sized for
/// elements up to a given length.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    cd: CartanData,
    seq: SeqCache,
    max_len: usize,
}

impl WeylGroup {
    pub fn new(cd: CartanData, max_len: usize) -> Self {
        WeylGroup {
            cd,
            seq: SeqCache::new(cd.m(), max_len + 4),
            max_len,
        }
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cd
    }

    pub fn seq(&self) -> &SeqCache {
        &self.seq
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    fn check_len(&self, w: &WeylElt) -> Result<()> {
        if w.length() > self.max_len {
            Err(Error::Domain(format!(
                "{w} has length {} beyond the table bound {}",
                w.length(),
                self.max_len
            )))
        } else {
            Ok(())
        }
    }

    /// Columns `w α₁` and `w α₂` from the closed forms, generic over the
    /// sequence accessor.
    fn columns<T, F>(&self, w: &WeylElt, b: F) -> Result<Matrix<T>>
    where
        T: Copy + std::ops::Neg<Output = T> + From<i8>,
        F: Fn(usize) -> Result<T>,
    {
        self.check_len(w)?;
        let n = w.n() as usize;
        let one = T::from(1);
        let zero = T::from(0);
        Ok(match w.shape() {
            Shape::Id => [[one, zero], [zero, one]],
            Shape::R1Alt => [
                [-b(2 * n + 1)?, -b(2 * n)?],
                [b(2 * n + 2)?, b(2 * n + 1)?],
            ],
            Shape::Alt12 => [
                [b(2 * n + 3)?, b(2 * n + 2)?],
                [-b(2 * n + 2)?, -b(2 * n + 1)?],
            ],
            Shape::R2Alt => [
                [b(2 * n + 1)?, b(2 * n + 2)?],
                [-b(2 * n)?, -b(2 * n + 1)?],
            ],
            Shape::Alt21 => [
                [-b(2 * n + 1)?, -b(2 * n + 2)?],
                [b(2 * n + 2)?, b(2 * n + 3)?],
            ],
        })
    }

    pub fn matrix(&self, w: &WeylElt) -> Result<Matrix<i128>> {
        self.columns(w, |k| self.seq.b(k))
    }

    pub fn matrix_f64(&self, w: &WeylElt) -> Result<Matrix<f64>> {
        self.columns(w, |k| self.seq.b_f64(k))
    }

    /// `w α` via the closed forms for `w α₁`, `w α₂`, extended linearly.
    pub fn act(&self, w: &WeylElt, alpha: &RootVec) -> Result<RootVec> {
        let [col1, col2] = self.matrix(w)?;
        let ovf = || Error::Overflow { what: "Weyl action" };
        let comb = |k: usize| -> Option<i128> {
            alpha
                .c1
                .checked_mul(col1[k])?
                .checked_add(alpha.c2.checked_mul(col2[k])?)
        };
        Ok(RootVec::new(comb(0).ok_or_else(ovf)?, comb(1).ok_or_else(ovf)?))
    }

    /// `w α` in binary64 coordinates; usable far beyond the exact range.
    pub fn act_f64(&self, w: &WeylElt, c: [f64; 2]) -> Result<[f64; 2]> {
        let [col1, col2] = self.matrix_f64(w)?;
        Ok([
            c[0] * col1[0] + c[1] * col2[0],
            c[0] * col1[1] + c[1] * col2[1],
        ])
    }

    pub fn act_weight(&self, w: &WeylElt, lambda: &Weight) -> Result<Weight> {
        let [col1, col2] = self.matrix_f64(w)?;
        Ok(Weight::new(
            lambda.s1 * col1[0] + lambda.s2 * col2[0],
            lambda.s1 * col1[1] + lambda.s2 * col2[1],
        ))
    }

    /// `wρ - ρ` from the `A_n` closed forms (integer coefficients).
    pub fn w_rho_shift(&self, w: &WeylElt) -> Result<RootVec> {
        self.check_len(w)?;
        let n = w.n() as usize;
        let a = |k| self.seq.a(k);
        Ok(match w.shape() {
            Shape::Id => RootVec::new(0, 0),
            Shape::R1Alt => RootVec::new(-a(2 * n + 1)?, -a(2 * n)?),
            Shape::R2Alt => RootVec::new(-a(2 * n)?, -a(2 * n + 1)?),
            Shape::Alt12 => RootVec::new(-a(2 * n + 2)?, -a(2 * n + 1)?),
            Shape::Alt21 => RootVec::new(-a(2 * n + 1)?, -a(2 * n + 2)?),
        })
    }

    /// `wρ - ρ` in binary64.
    pub fn w_rho_shift_f64(&self, w: &WeylElt) -> Result<[f64; 2]> {
        self.check_len(w)?;
        let n = w.n() as usize;
        let a = |k| self.seq.a_f64(k);
        Ok(match w.shape() {
            Shape::Id => [0.0, 0.0],
            Shape::R1Alt => [-a(2 * n + 1)?, -a(2 * n)?],
            Shape::R2Alt => [-a(2 * n)?, -a(2 * n + 1)?],
            Shape::Alt12 => [-a(2 * n + 2)?, -a(2 * n + 1)?],
            Shape::Alt21 => [-a(2 * n + 1)?, -a(2 * n + 2)?],
        })
    }

    /// `Φ₊ ∩ w⁻¹Φ₋` as `β_j = r_{k₁}⋯r_{k_{j-1}} α_{k_j}` where
    /// `w⁻¹ = r_{k₁}⋯r_{k_ℓ}` is reduced, in the order `j = 1..ℓ`.
    pub fn inversion_set(&self, w: &WeylElt) -> Result<Vec<RootVec>> {
        let word = w.inverse().word();
        word.iter()
            .enumerate()
            .map(|(j, &k)| {
                let prefix = WeylElt::alternating(word[0], j);
                self.act(&prefix, &k.root())
            })
            .collect()
    }

    /// Binary64 version of [`WeylGroup::inversion_set`].
    pub fn inversion_set_f64(&self, w: &WeylElt) -> Result<Vec<[f64; 2]>> {
        let word = w.inverse().word();
        word.iter()
            .enumerate()
            .map(|(j, &k)| {
                let prefix = WeylElt::alternating(word[0], j);
                let r = k.root();
                self.act_f64(&prefix, [r.c1 as f64, r.c2 as f64])
            })
            .collect()
    }

    /// `w ∈ W₁ = {w : w α₁ > 0}`, the minimal coset representatives of `W/⟨r₁⟩`.
    pub fn in_w1(&self, w: &WeylElt) -> Result<bool> {
        let [c1, c2] = self.act_f64(w, [1.0, 0.0])?;
        Ok(c1 >= 0.0 && c2 >= 0.0)
    }

    /// Whether `w⁻¹ α_i` is a negative root.
    pub fn inverse_makes_negative(&self, w: &WeylElt, i: Simple) -> Result<bool> {
        let r = i.root();
        let [c1, c2] = self.act_f64(&w.inverse(), [r.c1 as f64, r.c2 as f64])?;
        Ok(c1 <= 0.0 && c2 <= 0.0)
    }
}

/// `w α` by composing simple reflections along the reduced word.
pub fn act_via_word(cd: &CartanData, w: &WeylElt, alpha: &RootVec) -> Result<RootVec> {
    w.word()
        .iter()
        .rev()
        .try_fold(*alpha, |acc, &i| cd.simple_reflection(i, &acc))
}

pub fn act_weight_via_word(cd: &CartanData, w: &WeylElt, lambda: &Weight) -> Weight {
    w.word()
        .iter()
        .rev()
        .fold(*lambda, |acc, &i| cd.reflect_weight(i, &acc))
}

/// `wρ - ρ` by reflections, in exact integers: `r_i(ρ + δ) - ρ = δ - (1 + δ(h_i)) α_i`.
pub fn w_rho_shift_via_word(cd: &CartanData, w: &WeylElt) -> Result<RootVec> {
    let m = cd.m() as i128;
    let ovf = || Error::Overflow { what: "rho shift" };
    w.word().iter().rev().try_fold(RootVec::new(0, 0), |d, &i| {
        Ok(match i {
            Simple::One => {
                let p = 2 * d.c1 - m.checked_mul(d.c2).ok_or_else(ovf)?;
                RootVec::new(d.c1 - 1 - p, d.c2)
            }
            Simple::Two => {
                let p = 2 * d.c2 - m.checked_mul(d.c1).ok_or_else(ovf)?;
                RootVec::new(d.c1, d.c2 - 1 - p)
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(m: i64, len: usize) -> WeylGroup {
        WeylGroup::new(CartanData::new(m).unwrap(), len)
    }

    #[test]
    fn sequences_m3() {
        let a: Vec<i128> = (0..6).map(|n| seq_a(3, n).unwrap()).collect();
        assert_eq!(a, vec![0, 1, 4, 12, 33, 88]);
        let b: Vec<i128> = (1..6).map(|n| seq_b(3, n).unwrap()).collect();
        assert_eq!(b, vec![1, 3, 8, 21, 55]);
        assert_eq!(seq_b(3, 0).unwrap(), 0);
        assert_eq!(seq_a(3, -1), Err(Error::InvalidIndex { index: -1 }));
        assert_eq!(seq_b(5, -2), Err(Error::InvalidIndex { index: -2 }));
        for m in 3..10 {
            assert_eq!(seq_a(m, 0).unwrap(), 0);
            assert_eq!(seq_a(m, 1).unwrap(), 1);
        }
        assert!(seq_a(7, 200).is_err());
    }

    #[test]
    fn cache_matches_recursion() {
        for m in 3..8 {
            let c = SeqCache::new(m, 30);
            for n in 0..=30 {
                assert_eq!(c.a(n).unwrap(), seq_a(m, n as i64).unwrap());
                assert_eq!(c.b(n).unwrap(), seq_b(m, n as i64).unwrap());
                assert_eq!(c.a_f64(n).unwrap(), c.a(n).unwrap() as f64);
            }
            assert!(c.a(31).is_err());
        }
        // the float tail keeps going past the exact range
        let c = SeqCache::new(7, 120);
        assert!(c.b(120).is_err());
        let ratio = c.b_f64(120).unwrap() / c.b_f64(119).unwrap();
        assert!((ratio - CartanData::new(7).unwrap().gamma()).abs() < 1e-12);
    }

    #[test]
    fn canonical_forms() {
        let w = WeylElt::new(Shape::R1Alt, 1);
        assert_eq!(w.word(), vec![Simple::One, Simple::Two, Simple::One]);
        assert_eq!(w.length(), 3);
        assert_eq!(WeylElt::new(Shape::Alt21, 0).length(), 2);
        assert_eq!(WeylElt::identity().length(), 0);
        assert_eq!(w.to_string(), "r1(r2r1)^1");
        assert_eq!(WeylElt::new(Shape::Alt12, 2).to_string(), "(r1r2)^3");
        assert_eq!(WeylElt::new(Shape::Alt12, 0).inverse(), WeylElt::new(Shape::Alt21, 0));
        let word = [Simple::One, Simple::Two, Simple::Two, Simple::One, Simple::Two];
        assert_eq!(WeylElt::from_word(&word), WeylElt::new(Shape::R2Alt, 0));
    }

    #[test]
    fn enumeration() {
        let e = enumerate(2);
        assert_eq!(e.len(), 5);
        assert_eq!(
            e,
            vec![
                WeylElt::identity(),
                WeylElt::new(Shape::R1Alt, 0),
                WeylElt::new(Shape::R2Alt, 0),
                WeylElt::new(Shape::Alt12, 0),
                WeylElt::new(Shape::Alt21, 0),
            ]
        );
        let big = enumerate(40);
        assert_eq!(big.len(), 81);
        assert!(big.windows(2).all(|p| p[0] < p[1]));
        let mut words: Vec<Vec<Simple>> = big.iter().map(|w| w.word()).collect();
        words.sort();
        words.dedup();
        assert_eq!(words.len(), 81);
    }

    #[test]
    fn action_examples() {
        let g = group(3, 10);
        let a1 = Simple::One.root();
        assert_eq!(g.act(&WeylElt::new(Shape::R1Alt, 1), &a1).unwrap(), RootVec::new(-8, -3));
        assert_eq!(g.act(&WeylElt::identity(), &RootVec::new(5, -7)).unwrap(), RootVec::new(5, -7));
        assert_eq!(g.act(&WeylElt::new(Shape::Alt12, 0), &a1).unwrap(), RootVec::new(8, 3));
    }

    #[test]
    fn rho_shift_examples() {
        let g = group(3, 10);
        assert_eq!(g.w_rho_shift(&WeylElt::new(Shape::R1Alt, 1)).unwrap(), RootVec::new(-12, -4));
        assert_eq!(g.w_rho_shift(&WeylElt::identity()).unwrap(), RootVec::new(0, 0));
        assert_eq!(g.w_rho_shift(&WeylElt::new(Shape::Alt21, 0)).unwrap(), RootVec::new(-1, -4));
    }

    #[test]
    fn inversion_examples() {
        let g = group(3, 10);
        assert_eq!(
            g.inversion_set(&WeylElt::new(Shape::R1Alt, 0)).unwrap(),
            vec![RootVec::new(1, 0)]
        );
        assert_eq!(
            g.inversion_set(&WeylElt::new(Shape::Alt12, 0)).unwrap(),
            vec![RootVec::new(0, 1), RootVec::new(1, 3)]
        );
        let w = WeylElt::new(Shape::R1Alt, 1);
        let inv = g.inversion_set(&w).unwrap();
        assert_eq!(inv.len(), 3);
        let sum = inv.iter().fold(RootVec::new(0, 0), |s, b| s.checked_add(b).unwrap());
        // ρ - w⁻¹ρ = -(w⁻¹ρ - ρ)
        assert_eq!(sum, -g.w_rho_shift(&w.inverse()).unwrap());
    }

    #[test]
    fn w1_membership() {
        let g = group(3, 10);
        assert!(g.in_w1(&WeylElt::identity()).unwrap());
        assert!(!g.in_w1(&WeylElt::new(Shape::R1Alt, 0)).unwrap());
        for w in enumerate(10) {
            let expected = matches!(w.shape(), Shape::Id | Shape::Alt12 | Shape::R2Alt);
            assert_eq!(g.in_w1(&w).unwrap(), expected, "{w}");
        }
    }

    #[test]
    fn length_bound_enforced() {
        let g = group(3, 4);
        assert!(g.act(&WeylElt::new(Shape::R1Alt, 2), &Simple::One.root()).is_err());
    }

    #[test]
    fn weight_action_matches_reflections() {
        let cd = CartanData::new(4).unwrap();
        let g = WeylGroup::new(cd, 12);
        let lam = Weight::real(0.3, -1.7);
        for w in enumerate(12) {
            let a = g.act_weight(&w, &lam).unwrap();
            let b = act_weight_via_word(&cd, &w, &lam);
            let scale = 1.0 + b.s1.norm() + b.s2.norm();
            assert!((a.s1 - b.s1).norm() < 1e-12 * scale && (a.s2 - b.s2).norm() < 1e-12 * scale);
        }
    }
}
