//! Exact elements of the cyclotomic fields `Q(ζ_e)`.
//!
//! A value is stored in the power basis `1, ζ, ..., ζ^(φ(e)-1)`, i.e. as a
//! rational polynomial reduced modulo the cyclotomic polynomial `Φ_e`. The
//! reduced coefficient vector is unique for a fixed conductor, so equality is
//! coefficient equality after lifting both sides to a common conductor.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn mobius(mut n: u32) -> i32 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Integer coefficients of `Φ_n`, lowest degree first, from
/// `Φ_n = Π_{d | n} (x^d - 1)^μ(n/d)`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    let divisors: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
    let mut poly: Vec<i64> = alloc::vec![1];
    // multiply by (x^d - 1)
    for &d in divisors.iter().filter(|&&d| mobius(n / d) == 1) {
        let d = d as usize;
        let mut next = alloc::vec![0i64; poly.len() + d];
        for (i, &c) in poly.iter().enumerate() {
            next[i + d] += c;
            next[i] -= c;
        }
        poly = next;
    }
    // exact division by (x^d - 1): q_i = q_{i-d} - p_i, from the bottom up
    for &d in divisors.iter().filter(|&&d| mobius(n / d) == -1) {
        let d = d as usize;
        let qlen = poly.len() - d;
        let mut q = alloc::vec![0i64; qlen];
        for i in 0..qlen {
            let prev = if i >= d { q[i - d] } else { 0 };
            q[i] = prev - poly[i];
        }
        poly = q;
    }
    // sign normalisation: Φ_n is monic
    if *poly.last().unwrap() < 0 {
        for c in &mut poly {
            *c = -*c;
        }
    }
    poly
}

/// Reduces a dense polynomial in `ζ_e` (any length) to the canonical basis.
fn reduce(mut coeffs: Vec<BigRational>, e: u32) -> Vec<BigRational> {
    let phi_poly = cyclotomic_polynomial(e);
    let phi = phi_poly.len() - 1;
    // first fold exponents modulo e using ζ^e = 1
    if coeffs.len() > e as usize {
        let extra = coeffs.split_off(e as usize);
        for (i, c) in extra.into_iter().enumerate() {
            let j = (e as usize + i) % e as usize;
            let tmp = core::mem::replace(&mut coeffs[j], BigRational::zero());
            coeffs[j] = tmp + c;
        }
    }
    let nonzero_phi: Vec<(usize, BigInt)> = phi_poly
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i, BigInt::from(c)))
        .collect();
    for k in (phi..coeffs.len()).rev() {
        if coeffs[k].is_zero() {
            continue;
        }
        let t = core::mem::replace(&mut coeffs[k], BigRational::zero());
        for (j, c) in &nonzero_phi {
            if *j == phi {
                continue;
            }
            let idx = k - phi + j;
            let tmp = core::mem::replace(&mut coeffs[idx], BigRational::zero());
            coeffs[idx] = tmp - &t * BigRational::from_integer(c.clone());
        }
    }
    coeffs.resize(phi, BigRational::zero());
    coeffs
}

#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(conductor: u32) -> Self {
        Cyclotomic {
            conductor,
            coeffs: alloc::vec![BigRational::zero(); totient(conductor) as usize],
        }
    }

    pub fn from_rational(conductor: u32, q: BigRational) -> Self {
        let mut z = Self::zero(conductor);
        z.coeffs[0] = q;
        z
    }

    pub fn from_integer(conductor: u32, n: i64) -> Self {
        Self::from_rational(conductor, BigRational::from_integer(BigInt::from(n)))
    }

    /// `Σ c ζ_e^k` over the given terms; exponents are taken modulo `e`.
    pub fn from_terms(conductor: u32, terms: &[(i64, BigRational)]) -> Self {
        let e = conductor as i64;
        let mut dense = alloc::vec![BigRational::zero(); conductor as usize];
        for (k, c) in terms {
            let k = k.rem_euclid(e) as usize;
            let tmp = core::mem::replace(&mut dense[k], BigRational::zero());
            dense[k] = tmp + c;
        }
        Cyclotomic {
            conductor,
            coeffs: reduce(dense, conductor),
        }
    }

    /// `ζ_e^k`.
    pub fn zeta_pow(conductor: u32, k: i64) -> Self {
        Self::from_terms(conductor, &[(k, BigRational::one())])
    }

    /// Builds a value from an unreduced dense vector over `ζ_e^0..`.
    pub fn from_dense(conductor: u32, dense: Vec<BigRational>) -> Self {
        Cyclotomic {
            conductor,
            coeffs: reduce(dense, conductor),
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Canonical coefficients over `1, ζ, ..., ζ^(φ(e)-1)`.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs.first().cloned().unwrap_or_else(BigRational::zero))
        } else {
            None
        }
    }

    pub fn to_integer(&self) -> Option<i64> {
        let q = self.to_rational()?;
        if q.is_integer() {
            q.to_integer().to_i64()
        } else {
            None
        }
    }

    /// The same number written over a multiple `target` of the conductor.
    pub fn lift(&self, target: u32) -> Self {
        assert!(target % self.conductor == 0, "conductor must divide target");
        if target == self.conductor {
            return self.clone();
        }
        let step = (target / self.conductor) as usize;
        let mut dense = alloc::vec![BigRational::zero(); target as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                dense[i * step] = c.clone();
            }
        }
        Self::from_dense(target, dense)
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.conductor == b.conductor {
            return (a.clone(), b.clone());
        }
        let l = a.conductor.lcm(&b.conductor);
        (a.lift(l), b.lift(l))
    }

    /// Complex conjugate, `ζ -> ζ^-1`.
    pub fn conj(&self) -> Self {
        let e = self.conductor as usize;
        let mut dense = alloc::vec![BigRational::zero(); e];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                dense[(e - i) % e] = c.clone();
            }
        }
        Self::from_dense(self.conductor, dense)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Floating-point value as `(re, im)`, with `ζ_e = exp(2πi/e)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let e = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = rational_to_f64(c);
            let angle = 2.0 * core::f64::consts::PI * k as f64 / e;
            re += v * libm::cos(angle);
            im += v * libm::sin(angle);
        }
        (re, im)
    }

    /// `a0 + a1*z + a2*z^2 + ...` over the nonzero terms, `z = ζ_e`.
    pub fn render(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            match k {
                0 => {
                    let _ = write!(s, "{}", abs);
                }
                _ => {
                    if !abs.is_one() {
                        let _ = write!(s, "{}*", abs);
                    }
                    if k == 1 {
                        s.push('z');
                    } else {
                        let _ = write!(s, "z^{}", k);
                    }
                }
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
    })
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [z = zeta_{}]", self.render(), self.conductor)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::common(self, rhs);
        Cyclotomic {
            conductor: a.conductor,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::common(self, rhs);
        Cyclotomic {
            conductor: a.conductor,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
        }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::common(self, rhs);
        if let Some(q) = a.to_rational() {
            return b.scale(&q);
        }
        if let Some(q) = b.to_rational() {
            return a.scale(&q);
        }
        let mut acc = ProductAccumulator::new(a.conductor);
        acc.add_product(&a, &b, &BigRational::one());
        acc.finish()
    }
}

/// Sums of products `Σ w · a · b` accumulated in `Q[x]/(x^e - 1)` and reduced
/// modulo `Φ_e` once at the end.
pub struct ProductAccumulator {
    conductor: u32,
    dense: Vec<BigRational>,
}

impl ProductAccumulator {
    pub fn new(conductor: u32) -> Self {
        ProductAccumulator {
            conductor,
            dense: alloc::vec![BigRational::zero(); conductor as usize],
        }
    }

    /// Adds `weight * a * b`. Both operands must have conductors dividing
    /// the accumulator's.
    pub fn add_product(&mut self, a: &Cyclotomic, b: &Cyclotomic, weight: &BigRational) {
        let e = self.conductor as usize;
        let sa = e / a.conductor as usize;
        let sb = e / b.conductor as usize;
        assert!(sa * a.conductor as usize == e && sb * b.conductor as usize == e);
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let wx = x * weight;
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let k = (i * sa + j * sb) % e;
                let tmp = core::mem::replace(&mut self.dense[k], BigRational::zero());
                self.dense[k] = tmp + &wx * y;
            }
        }
    }

    /// Adds `weight * a * conj(b)`.
    pub fn add_product_conj(&mut self, a: &Cyclotomic, b: &Cyclotomic, weight: &BigRational) {
        let e = self.conductor as usize;
        let sa = e / a.conductor as usize;
        let sb = e / b.conductor as usize;
        assert!(sa * a.conductor as usize == e && sb * b.conductor as usize == e);
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let wx = x * weight;
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let k = (i * sa + e - (j * sb) % e) % e;
                let tmp = core::mem::replace(&mut self.dense[k], BigRational::zero());
                self.dense[k] = tmp + &wx * y;
            }
        }
    }

    /// Adds `weight * a`.
    pub fn add(&mut self, a: &Cyclotomic, weight: &BigRational) {
        let e = self.conductor as usize;
        let sa = e / a.conductor as usize;
        assert!(sa * a.conductor as usize == e);
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let k = (i * sa) % e;
            let tmp = core::mem::replace(&mut self.dense[k], BigRational::zero());
            self.dense[k] = tmp + x * weight;
        }
    }

    pub fn finish(self) -> Cyclotomic {
        Cyclotomic::from_dense(self.conductor, self.dense)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Float evaluation of an unreduced dense vector; independent of `reduce`.
    fn eval_dense(e: u32, dense: &[(i64, i64, i64)]) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for &(k, n, d) in dense {
            let a = 2.0 * core::f64::consts::PI * k as f64 / e as f64;
            re += n as f64 / d as f64 * libm::cos(a);
            im += n as f64 / d as f64 * libm::sin(a);
        }
        (re, im)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), alloc::vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), alloc::vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), alloc::vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), alloc::vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), alloc::vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), alloc::vec![1, 0, -1, 0, 1]);
        // Φ_105 is the first with a coefficient of absolute value 2
        assert!(cyclotomic_polynomial(105).iter().any(|&c| c == -2));
        for n in 1..200 {
            assert_eq!(cyclotomic_polynomial(n).len() as u32 - 1, totient(n));
        }
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for e in [3u32, 5, 7, 12, 60, 180] {
            let terms: Vec<(i64, BigRational)> = (0..e as i64).map(|k| (k, BigRational::one())).collect();
            assert!(Cyclotomic::from_terms(e, &terms).is_zero(), "e = {e}");
        }
    }

    #[test]
    fn golden_ratio_identity() {
        // (1 + sqrt 5)/2 = -(z^2 + z^3) for z = ζ_5; it satisfies x^2 = x + 1
        let b5 = -&(&Cyclotomic::zeta_pow(5, 2) + &Cyclotomic::zeta_pow(5, 3));
        let sq = &b5 * &b5;
        assert_eq!(sq, &b5 + &Cyclotomic::from_integer(5, 1));
        let (re, im) = b5.to_complex();
        assert!((re - (1.0 + libm::sqrt(5.0)) / 2.0).abs() < 1e-12 && im.abs() < 1e-12);
        assert_eq!(b5.conj(), b5);
    }

    #[test]
    fn sqrt_minus_seven() {
        // z + z^2 + z^4 for z = ζ_7 equals (-1 + sqrt(-7))/2
        let b7 = &(&Cyclotomic::zeta_pow(7, 1) + &Cyclotomic::zeta_pow(7, 2)) + &Cyclotomic::zeta_pow(7, 4);
        let s = &(&b7 + &b7) + &Cyclotomic::from_integer(7, 1);
        assert_eq!((&s * &s).to_integer(), Some(-7));
        assert_eq!(&b7 + &b7.conj(), Cyclotomic::from_integer(7, -1));
    }

    #[test]
    fn lifting_preserves_value() {
        let a = Cyclotomic::from_terms(6, &[(1, q(2, 3)), (5, q(-1, 2))]);
        let l = a.lift(30);
        assert_eq!(a, l);
        let (x, y) = a.to_complex();
        let (u, v) = l.to_complex();
        assert!((x - u).abs() < 1e-12 && (y - v).abs() < 1e-12);
        // ζ_4 = i and ζ_3 mix into conductor 12
        let i = Cyclotomic::zeta_pow(4, 1);
        let w = Cyclotomic::zeta_pow(3, 1);
        let p = &i * &w;
        assert_eq!(p.conductor(), 12);
        assert_eq!(p, Cyclotomic::zeta_pow(12, 7));
    }

    #[test]
    fn render_format() {
        let a = Cyclotomic::from_terms(5, &[(0, q(1, 2)), (1, q(-1, 1)), (3, q(3, 1))]);
        assert_eq!(a.render(), "1/2 - z + 3*z^3");
        assert_eq!(Cyclotomic::zero(5).render(), "0");
        assert_eq!(Cyclotomic::from_integer(1, -4).render(), "-4");
    }

    #[test]
    fn accumulator_matches_products() {
        let a = Cyclotomic::from_terms(12, &[(1, q(1, 1)), (4, q(2, 1))]);
        let b = Cyclotomic::from_terms(4, &[(1, q(-1, 3))]);
        let mut acc = ProductAccumulator::new(12);
        acc.add_product(&a, &b, &q(3, 1));
        acc.add(&a, &q(1, 1));
        let expect = &(&(&a * &b) * &Cyclotomic::from_integer(1, 3)) + &a;
        assert_eq!(acc.finish(), expect);
    }

    proptest! {
        #[test]
        fn reduction_keeps_float_value(
            e in prop::sample::select(alloc::vec![1u32, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 20, 24, 30, 60, 84, 180]),
            terms in prop::collection::vec((0i64..400, -20i64..20, 1i64..6), 0..12)
        ) {
            let exact: Vec<(i64, BigRational)> = terms.iter().map(|&(k, n, d)| (k, q(n, d))).collect();
            let z = Cyclotomic::from_terms(e, &exact);
            let (re, im) = z.to_complex();
            let (er, ei) = eval_dense(e, &terms);
            prop_assert!((re - er).abs() < 1e-9 && (im - ei).abs() < 1e-9);
        }

        #[test]
        fn canonical_form_is_unique(
            terms in prop::collection::vec((0i64..60, -5i64..5), 0..8),
            shift in 0i64..12
        ) {
            // adding a multiple of Φ_12(ζ) = 0 (shifted) must not change the value
            let e = 12u32;
            let base: Vec<(i64, BigRational)> = terms.iter().map(|&(k, n)| (k, q(n, 1))).collect();
            let mut noisy = base.clone();
            for (i, c) in cyclotomic_polynomial(e).iter().enumerate() {
                noisy.push((i as i64 + shift, q(*c * 7, 1)));
            }
            let a = Cyclotomic::from_terms(e, &base);
            let b = Cyclotomic::from_terms(e, &noisy);
            prop_assert_eq!(a.coefficients(), b.coefficients());
        }

        #[test]
        fn multiplication_matches_floats(
            x in prop::collection::vec((0i64..20, -4i64..4), 1..5),
            y in prop::collection::vec((0i64..20, -4i64..4), 1..5)
        ) {
            let e = 20u32;
            let a = Cyclotomic::from_terms(e, &x.iter().map(|&(k, n)| (k, q(n, 1))).collect::<Vec<_>>());
            let b = Cyclotomic::from_terms(e, &y.iter().map(|&(k, n)| (k, q(n, 1))).collect::<Vec<_>>());
            let (ar, ai) = a.to_complex();
            let (br, bi) = b.to_complex();
            let (pr, pi) = (&a * &b).to_complex();
            prop_assert!((pr - (ar * br - ai * bi)).abs() < 1e-9);
            prop_assert!((pi - (ar * bi + ai * br)).abs() < 1e-9);
            let (cr, ci) = a.conj().to_complex();
            prop_assert!((cr - ar).abs() < 1e-9 && (ci + ai).abs() < 1e-9);
        }
    }
}
