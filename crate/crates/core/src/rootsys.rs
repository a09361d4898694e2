//! Cartan data, root and weight arithmetic for the rank 2 hyperbolic
//! Kac-Moody algebra with symmetric Cartan matrix `[[2, -m], [-m, 2]]`.
//!
//! All coordinates are taken in the simple-root basis. Coroots never appear
//! explicitly: for a real root `α = c₁α₁ + c₂α₂` the symmetric form identifies
//! `h_α` with `c₁h₁ + c₂h₂`, so `λ(h_α)` is the bilinear form `(λ, α)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the two simple roots (and the matching simple reflection).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Simple {
    One,
    Two,
}

impl Simple {
    pub fn other(self) -> Simple {
        match self {
            Simple::One => Simple::Two,
            Simple::Two => Simple::One,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Simple::One => 1,
            Simple::Two => 2,
        }
    }

    pub fn from_index(i: usize) -> Option<Simple> {
        match i {
            1 => Some(Simple::One),
            2 => Some(Simple::Two),
            _ => None,
        }
    }

    pub fn root(self) -> RootVec {
        match self {
            Simple::One => RootVec::new(1, 0),
            Simple::Two => RootVec::new(0, 1),
        }
    }
}

/// Cartan parameter `m ≥ 3` with its derived constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartanData {
    m: i64,
    gamma: f64,
}

impl CartanData {
    pub fn new(m: i64) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidCartan { m });
        }
        let mf = m as f64;
        let gamma = (mf + (mf * mf - 4.0).sqrt()) / 2.0;
        Ok(CartanData { m, gamma })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn mf(&self) -> f64 {
        self.m as f64
    }

    /// Larger root of `x² - m x + 1`.
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// `2γ - m = √(m² - 4) = γ - γ⁻¹`.
    pub fn discriminant_root(&self) -> f64 {
        let mf = self.mf();
        (mf * mf - 4.0).sqrt()
    }

    pub fn gram(&self) -> [[i64; 2]; 2] {
        [[2, -self.m], [-self.m, 2]]
    }

    /// The values `(λ(h₁), λ(h₂))` on the simple coroots.
    pub fn coroot_values(&self, lambda: &Weight) -> (Complex64, Complex64) {
        let m = self.mf();
        (
            lambda.s1 * 2.0 - lambda.s2 * m,
            lambda.s2 * 2.0 - lambda.s1 * m,
        )
    }

    /// Bilinear form `(λ, c₁α₁ + c₂α₂)` for arbitrary (float) coordinates.
    pub fn form(&self, lambda: &Weight, c1: f64, c2: f64) -> Complex64 {
        let (p1, p2) = self.coroot_values(lambda);
        p1 * c1 + p2 * c2
    }

    /// `λ(h_α)` for a real root `α`.
    pub fn pair(&self, lambda: &Weight, alpha: &RootVec) -> Result<Complex64> {
        if !self.is_real_root(alpha) {
            return Err(Error::NotRealRoot {
                c1: alpha.c1,
                c2: alpha.c2,
            });
        }
        Ok(self.form(lambda, alpha.c1 as f64, alpha.c2 as f64))
    }

    /// Half the squared norm, `c₁² + c₂² - m c₁ c₂`, computed exactly.
    pub fn half_norm(&self, alpha: &RootVec) -> BigInt {
        let fast = (|| {
            let a = alpha.c1.checked_mul(alpha.c1)?;
            let b = alpha.c2.checked_mul(alpha.c2)?;
            let c = alpha
                .c1
                .checked_mul(alpha.c2)?
                .checked_mul(self.m as i128)?;
            a.checked_add(b)?.checked_sub(c)
        })();
        match fast {
            Some(v) => BigInt::from(v),
            None => {
                let c1 = BigInt::from(alpha.c1);
                let c2 = BigInt::from(alpha.c2);
                &c1 * &c1 + &c2 * &c2 - BigInt::from(self.m) * &c1 * &c2
            }
        }
    }

    /// `(α, α)`; equals 2 exactly on real roots.
    pub fn norm(&self, alpha: &RootVec) -> BigInt {
        self.half_norm(alpha) * 2
    }

    pub fn is_real_root(&self, alpha: &RootVec) -> bool {
        self.half_norm(alpha) == BigInt::from(1)
    }

    /// `r_i(α) = α - (α, α_i) α_i`.
    pub fn simple_reflection(&self, i: Simple, alpha: &RootVec) -> Result<RootVec> {
        let m = self.m as i128;
        let ovf = || Error::Overflow {
            what: "simple reflection",
        };
        match i {
            Simple::One => {
                let c1 = m
                    .checked_mul(alpha.c2)
                    .and_then(|v| v.checked_sub(alpha.c1))
                    .ok_or_else(ovf)?;
                Ok(RootVec::new(c1, alpha.c2))
            }
            Simple::Two => {
                let c2 = m
                    .checked_mul(alpha.c1)
                    .and_then(|v| v.checked_sub(alpha.c2))
                    .ok_or_else(ovf)?;
                Ok(RootVec::new(alpha.c1, c2))
            }
        }
    }

    pub fn reflect_weight(&self, i: Simple, lambda: &Weight) -> Weight {
        let (p1, p2) = self.coroot_values(lambda);
        match i {
            Simple::One => Weight::new(lambda.s1 - p1, lambda.s2),
            Simple::Two => Weight::new(lambda.s1, lambda.s2 - p2),
        }
    }

    /// Principal logarithm of `a^μ`, i.e. `μ(h₁) ln x₁ + μ(h₂) ln x₂`.
    pub fn torus_log(&self, a: &TorusPoint, mu: &Weight) -> Complex64 {
        let (p1, p2) = self.coroot_values(mu);
        p1 * a.x1.ln() + p2 * a.x2.ln()
    }

    pub fn torus_eval(&self, a: &TorusPoint, mu: &Weight) -> Complex64 {
        self.torus_log(a, mu).exp()
    }

    /// `ρ = (α₁ + α₂)/(2 - m)`.
    pub fn rho(&self) -> Weight {
        let c = 1.0 / (2.0 - self.mf());
        Weight::real(c, c)
    }

    /// Fundamental weight `ϖ₂ = (mα₁ + 2α₂)/(4 - m²)`.
    pub fn varpi2(&self) -> Weight {
        let m = self.mf();
        let d = 4.0 - m * m;
        Weight::real(m / d, 2.0 / d)
    }

    /// `(a^{α₁}, a^{α₂})`.
    pub fn cone_values(&self, a: &TorusPoint) -> (f64, f64) {
        let m = self.mf();
        let (l1, l2) = (a.x1.ln(), a.x2.ln());
        ((2.0 * l1 - m * l2).exp(), (2.0 * l2 - m * l1).exp())
    }

    pub fn in_a_prime(&self, a: &TorusPoint) -> bool {
        let (q1, q2) = self.cone_values(a);
        q1 < 1.0 && q2 < 1.0
    }

    /// Strict form: the boundary `Re ν(h_i) = -2` does not qualify.
    pub fn godement(&self, nu: &Weight) -> bool {
        let (p1, p2) = self.coroot_values(nu);
        p1.re < -2.0 && p2.re < -2.0
    }

    pub(crate) fn require_godement(&self, nu: &Weight) -> Result<()> {
        if self.godement(nu) {
            Ok(())
        } else {
            let (p1, p2) = self.coroot_values(nu);
            Err(Error::GodementViolation { p1: p1.re, p2: p2.re })
        }
    }

    pub(crate) fn require_cone(&self, a: &TorusPoint) -> Result<()> {
        if self.in_a_prime(a) {
            Ok(())
        } else {
            let (q1, q2) = self.cone_values(a);
            Err(Error::NotInCone { q1, q2 })
        }
    }
}

/// Integer vector `c₁α₁ + c₂α₂` in the root lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootVec {
    pub c1: i128,
    pub c2: i128,
}

impl RootVec {
    pub const fn new(c1: i128, c2: i128) -> Self {
        RootVec { c1, c2 }
    }

    pub fn is_zero(&self) -> bool {
        self.c1 == 0 && self.c2 == 0
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.c1 >= 0 && self.c2 >= 0
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.c1 <= 0 && self.c2 <= 0
    }

    /// Exchanges the two coordinates (the diagram automorphism α₁ ↔ α₂).
    pub fn swapped(&self) -> RootVec {
        RootVec::new(self.c2, self.c1)
    }

    pub fn checked_add(&self, other: &RootVec) -> Option<RootVec> {
        Some(RootVec::new(
            self.c1.checked_add(other.c1)?,
            self.c2.checked_add(other.c2)?,
        ))
    }

    pub fn to_weight(&self) -> Weight {
        Weight::real(self.c1 as f64, self.c2 as f64)
    }
}

impl Neg for RootVec {
    type Output = RootVec;
    fn neg(self) -> RootVec {
        RootVec::new(-self.c1, -self.c2)
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.c1, self.c2)
    }
}

/// Scalar weight `s₁α₁ + s₂α₂`; real weights have zero imaginary parts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Weight {
    pub s1: Complex64,
    pub s2: Complex64,
}

impl Weight {
    pub fn new(s1: Complex64, s2: Complex64) -> Self {
        Weight { s1, s2 }
    }

    pub fn real(s1: f64, s2: f64) -> Self {
        Weight::new(Complex64::new(s1, 0.0), Complex64::new(s2, 0.0))
    }

    pub fn zero() -> Self {
        Weight::real(0.0, 0.0)
    }

    /// The weight with prescribed simple-coroot values `λ(h₁) = p₁`, `λ(h₂) = p₂`.
    pub fn from_pairings(cd: &CartanData, p1: Complex64, p2: Complex64) -> Self {
        let m = cd.mf();
        let det = 4.0 - m * m;
        Weight::new((p1 * 2.0 + p2 * m) / det, (p2 * 2.0 + p1 * m) / det)
    }

    pub fn swapped(&self) -> Weight {
        Weight::new(self.s2, self.s1)
    }

    pub fn is_real(&self) -> bool {
        self.s1.im == 0.0 && self.s2.im == 0.0
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight::new(self.s1 + o.s1, self.s2 + o.s2)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        Weight::new(self.s1 - o.s1, self.s2 - o.s2)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.s1, -self.s2)
    }
}

impl Mul<Complex64> for Weight {
    type Output = Weight;
    fn mul(self, k: Complex64) -> Weight {
        Weight::new(self.s1 * k, self.s2 * k)
    }
}

impl Mul<f64> for Weight {
    type Output = Weight;
    fn mul(self, k: f64) -> Weight {
        Weight::new(self.s1 * k, self.s2 * k)
    }
}

/// The torus element `h_{α₁}(x₁) h_{α₂}(x₂)` with `x₁, x₂ > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TorusPoint {
    x1: f64,
    x2: f64,
}

impl TorusPoint {
    pub fn new(x1: f64, x2: f64) -> Result<Self> {
        if !(x1 > 0.0 && x2 > 0.0 && x1.is_finite() && x2.is_finite()) {
            return Err(Error::Domain(format!(
                "torus coordinates must be positive and finite, got ({x1}, {x2})"
            )));
        }
        Ok(TorusPoint { x1, x2 })
    }

    pub fn x1(&self) -> f64 {
        self.x1
    }

    pub fn x2(&self) -> f64 {
        self.x2
    }

    pub fn swapped(&self) -> TorusPoint {
        TorusPoint {
            x1: self.x2,
            x2: self.x1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn cd(m: i64) -> CartanData {
        CartanData::new(m).unwrap()
    }

    #[test]
    fn gamma_values() {
        assert_relative_eq!(cd(3).gamma(), 2.618_033_988_749_895, max_relative = 1e-14);
        assert_relative_eq!(cd(4).gamma(), 2.0 + 3f64.sqrt(), max_relative = 1e-14);
        for m in 3..20 {
            let c = cd(m);
            let g = c.gamma();
            assert!((g * g - c.mf() * g + 1.0).abs() < 1e-10 * g * g);
            assert!(g > 1.0);
            assert_relative_eq!(2.0 * g - c.mf(), c.discriminant_root(), max_relative = 1e-12);
        }
    }

    #[test]
    fn affine_and_finite_rejected() {
        assert_eq!(CartanData::new(2), Err(Error::InvalidCartan { m: 2 }));
        assert!(CartanData::new(-5).is_err());
    }

    #[test]
    fn pairing_examples() {
        let c = cd(3);
        let p = c.pair(&Weight::real(3.0, 3.0), &Simple::One.root()).unwrap();
        assert_eq!(p, Complex64::new(-3.0, 0.0));
        for m in 3..8 {
            let c = cd(m);
            for i in [Simple::One, Simple::Two] {
                let p = c.pair(&c.rho(), &i.root()).unwrap();
                assert_relative_eq!(p.re, 1.0, max_relative = 1e-14);
            }
        }
        let zero = c.pair(&Weight::zero(), &RootVec::new(3, 8)).unwrap();
        assert_eq!(zero, Complex64::new(0.0, 0.0));
        assert_eq!(
            c.pair(&Weight::zero(), &RootVec::new(1, 1)),
            Err(Error::NotRealRoot { c1: 1, c2: 1 })
        );
    }

    #[test]
    fn real_root_examples() {
        let c = cd(3);
        assert!(c.is_real_root(&RootVec::new(1, 0)));
        assert!(c.is_real_root(&RootVec::new(3, 1)));
        assert!(!c.is_real_root(&RootVec::new(1, 1)));
        // large coordinates go through the bignum path
        let big = RootVec::new(i128::MAX / 3, i128::MAX / 5);
        assert!(!c.is_real_root(&big));
    }

    #[test]
    fn reflection_examples() {
        let c = cd(3);
        assert_eq!(
            c.simple_reflection(Simple::One, &RootVec::new(1, 0)).unwrap(),
            RootVec::new(-1, 0)
        );
        assert_eq!(
            c.simple_reflection(Simple::One, &RootVec::new(0, 1)).unwrap(),
            RootVec::new(3, 1)
        );
        assert_eq!(
            c.simple_reflection(Simple::Two, &RootVec::new(3, 1)).unwrap(),
            RootVec::new(3, 8)
        );
        assert!(c
            .simple_reflection(Simple::One, &RootVec::new(0, i128::MAX / 2))
            .is_err());
    }

    #[test]
    fn torus_examples() {
        let c = cd(3);
        let a = TorusPoint::new(2.0, 2.0).unwrap();
        assert_relative_eq!(c.torus_eval(&a, &Simple::One.root().to_weight()).re, 0.5, max_relative = 1e-14);
        assert_eq!(c.torus_eval(&a, &Weight::zero()), Complex64::new(1.0, 0.0));
        assert_relative_eq!(c.torus_eval(&a, &c.rho()).re, 4.0, max_relative = 1e-14);
        assert!(TorusPoint::new(0.0, 1.0).is_err());
        assert!(TorusPoint::new(1.0, -1.0).is_err());
    }

    #[test]
    fn rho_and_varpi2() {
        let c = cd(3);
        assert_eq!(c.rho(), Weight::real(-1.0, -1.0));
        let v = c.varpi2();
        assert_relative_eq!(v.s1.re, -0.6, max_relative = 1e-14);
        assert_relative_eq!(v.s2.re, -0.4, max_relative = 1e-14);
        for m in 3..10 {
            let c = cd(m);
            let (a, b) = c.coroot_values(&c.varpi2());
            assert!(a.norm() < 1e-14);
            assert_relative_eq!(b.re, 1.0, max_relative = 1e-14);
        }
    }

    #[test]
    fn cone_and_godement() {
        let c = cd(3);
        assert!(c.in_a_prime(&TorusPoint::new(2.0, 2.0).unwrap()));
        assert!(!c.in_a_prime(&TorusPoint::new(1.0, 1.0).unwrap()));
        assert!(!c.in_a_prime(&TorusPoint::new(0.5, 0.5).unwrap()));
        assert!(c.godement(&Weight::real(3.0, 3.0)));
        assert!(!c.godement(&Weight::real(2.0, 2.0)));
        let p = Complex64::new(-2.5, 7.0);
        assert!(c.godement(&Weight::from_pairings(&c, p, p)));
    }

    #[test]
    fn from_pairings_inverts_coroot_values() {
        let c = cd(5);
        let p1 = Complex64::new(-3.25, 0.5);
        let p2 = Complex64::new(1.5, -2.0);
        let (q1, q2) = c.coroot_values(&Weight::from_pairings(&c, p1, p2));
        assert!((q1 - p1).norm() < 1e-13);
        assert!((q2 - p2).norm() < 1e-13);
    }

    proptest! {
        #[test]
        fn reflection_is_involutive_and_isometric(m in 3i64..8, c1 in -50i128..=50, c2 in -50i128..=50, two in any::<bool>()) {
            let c = cd(m);
            let i = if two { Simple::Two } else { Simple::One };
            let a = RootVec::new(c1, c2);
            let r = c.simple_reflection(i, &a).unwrap();
            prop_assert_eq!(c.simple_reflection(i, &r).unwrap(), a);
            prop_assert_eq!(c.norm(&r), c.norm(&a));
        }

        #[test]
        fn torus_eval_is_a_homomorphism(
            x1 in 0.1f64..10.0, x2 in 0.1f64..10.0,
            a1 in -3.0f64..3.0, a2 in -3.0f64..3.0, b1 in -3.0f64..3.0, b2 in -3.0f64..3.0,
            im in -2.0f64..2.0,
        ) {
            let c = cd(3);
            let a = TorusPoint::new(x1, x2).unwrap();
            let mu = Weight::new(Complex64::new(a1, im), Complex64::new(a2, 0.0));
            let nu = Weight::real(b1, b2);
            let lhs = c.torus_eval(&a, &(mu + nu));
            let rhs = c.torus_eval(&a, &mu) * c.torus_eval(&a, &nu);
            prop_assert!((lhs - rhs).norm() <= 1e-12 * lhs.norm().max(1e-300));
        }

        #[test]
        fn pairing_is_linear(s1 in -5.0f64..5.0, s2 in -5.0f64..5.0, t1 in -5.0f64..5.0, t2 in -5.0f64..5.0) {
            let c = cd(4);
            let (l, m) = (Weight::real(s1, s2), Weight::real(t1, t2));
            let alpha = RootVec::new(1, 4);
            let lhs = c.pair(&(l + m), &alpha).unwrap();
            let rhs = c.pair(&l, &alpha).unwrap() + c.pair(&m, &alpha).unwrap();
            prop_assert!((lhs - rhs).norm() < 1e-12 * (1.0 + lhs.norm()));
        }
    }
}
