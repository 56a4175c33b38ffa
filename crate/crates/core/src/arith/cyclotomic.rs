//! Exact real numbers in cyclotomic fields.
//!
//! An [`ExactScalar`] is a finite sum `Σ c_e ζ_N^e` with rational `c_e`,
//! stored in a canonical basis of `Q(ζ_N)` and always at its minimal
//! conductor. The basis is the tensor product of the power bases of the
//! prime-power factors `Q(ζ_{p^k})`, where `ζ_{p^k}^a` with
//! `a ≥ (p-1)p^{k-1}` is rewritten through
//! `ζ^{(p-1)p^{k-1} + r} = -Σ_{i<p-1} ζ^{r + i p^{k-1}}`.
//! Each basis monomial is identified with its exponent `e ∈ [0, N)`, so a
//! value is a sorted sparse map from exponent to rational. Two values are
//! equal iff their (conductor, map) pairs are equal.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::Rat;
use super::ArithError;

/// Per-conductor reduction data, shared between all scalars of that conductor.
struct Context {
    /// basis expansion of ζ^x for every x in [0, n)
    expand: Vec<Vec<(u32, i8)>>,
    /// cos(2πx/n) for every x in [0, n)
    cos: Vec<f64>,
}

static CONTEXTS: LazyLock<RwLock<HashMap<u32, Arc<Context>>>> = LazyLock::new(Default::default);

fn context(n: u32) -> Arc<Context> {
    if let Some(c) = CONTEXTS.read().unwrap().get(&n) {
        return c.clone();
    }
    let ctx = Arc::new(Context::build(n));
    CONTEXTS.write().unwrap().entry(n).or_insert(ctx).clone()
}

pub(crate) fn prime_powers(mut n: u32) -> Vec<(u32, u32, u32)> {
    // (p, k, p^k)
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut k = 0;
            let mut q = 1;
            while n % p == 0 {
                n /= p;
                k += 1;
                q *= p;
            }
            out.push((p, k, q));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1, n));
    }
    out
}

fn mod_inverse(a: i64, m: i64) -> i64 {
    let e = a.extended_gcd(&m);
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m)
}

impl Context {
    fn build(n: u32) -> Context {
        let factors = prime_powers(n);
        let nn = n as i64;
        // multiplier taking x to its component exponent in Z/q
        let comp: Vec<(u32, u32, u32, i64, i64)> = factors
            .iter()
            .map(|&(p, k, q)| {
                let cof = nn / q as i64;
                let inv = if q == 1 { 0 } else { mod_inverse(cof % q as i64, q as i64) };
                (p, k, q, cof, inv)
            })
            .collect();
        let mut expand = Vec::with_capacity(n as usize);
        for x in 0..nn {
            let mut terms: Vec<(i64, i8)> = vec![(0, 1)];
            for &(p, k, q, cof, inv) in &comp {
                let a = (x * inv).rem_euclid(q as i64);
                let pk1 = (q / p) as i64;
                let phi = (p as i64 - 1) * pk1;
                let local: Vec<(i64, i8)> = if a < phi {
                    vec![(a, 1)]
                } else {
                    let r = a - phi;
                    (0..(p as i64 - 1)).map(|i| (r + i * pk1, -1)).collect()
                };
                let _ = k;
                let mut next = Vec::with_capacity(terms.len() * local.len());
                for &(e, s) in &terms {
                    for &(a, t) in &local {
                        next.push(((e + a * cof).rem_euclid(nn), s * t));
                    }
                }
                terms = next;
            }
            expand.push(terms.into_iter().map(|(e, s)| (e as u32, s)).collect());
        }
        let cos = (0..n)
            .map(|x| (2.0 * std::f64::consts::PI * x as f64 / n as f64).cos())
            .collect();
        Context { expand, cos }
    }
}

/// Exact element of the real subfield of a cyclotomic field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    conductor: u32,
    terms: Vec<(u32, Rat)>,
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    a.gcd(&b)
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// Sort by exponent, merge duplicates, drop zeros.
fn normalize_terms(mut terms: Vec<(u32, Rat)>) -> Vec<(u32, Rat)> {
    terms.sort_unstable_by_key(|t| t.0);
    let mut out: Vec<(u32, Rat)> = Vec::with_capacity(terms.len());
    for (e, c) in terms {
        match out.last_mut() {
            Some(last) if last.0 == e => last.1 = &last.1 + &c,
            _ => out.push((e, c)),
        }
    }
    out.retain(|t| !t.1.is_zero());
    out
}

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar { conductor: 1, terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::rational(Rat::ONE)
    }

    pub fn rational(r: Rat) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        ExactScalar { conductor: 1, terms: vec![(0, r)] }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(Rat::int(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::rational(Rat::new(n, d))
    }

    /// Builds `Σ c_e ζ_N^e` from arbitrary exponents, reducing to canonical
    /// form. Fails with [`ArithError::NotReal`] if the value is not fixed by
    /// complex conjugation.
    pub fn from_exponents(n: u32, coeffs: &[(i64, Rat)]) -> Result<Self, ArithError> {
        if n == 0 {
            return Err(ArithError::BadConductor(0));
        }
        let v = Self::reduce_raw(n, coeffs.iter().map(|(e, c)| (e.rem_euclid(n as i64) as u32, c.clone())));
        if v.conjugate() != v {
            return Err(ArithError::NotReal);
        }
        Ok(v)
    }

    /// Canonical reduction without the realness check; the result may be
    /// non-real and is only used internally.
    fn reduce_raw(n: u32, raw: impl Iterator<Item = (u32, Rat)>) -> Self {
        let ctx = context(n);
        let mut acc = Vec::new();
        for (e, c) in raw {
            if c.is_zero() {
                continue;
            }
            for &(b, s) in &ctx.expand[e as usize] {
                acc.push((b, if s > 0 { c.clone() } else { -&c }));
            }
        }
        Self::from_canonical(n, normalize_terms(acc))
    }

    /// Takes canonical terms at conductor `n` and drops to the minimal conductor.
    fn from_canonical(n: u32, terms: Vec<(u32, Rat)>) -> Self {
        if terms.is_empty() {
            return Self::zero();
        }
        let g = terms.iter().fold(n, |g, t| gcd_u32(g, t.0));
        if g == 1 {
            return ExactScalar { conductor: n, terms };
        }
        let terms = terms.into_iter().map(|(e, c)| (e / g, c)).collect();
        ExactScalar { conductor: n / g, terms }
    }

    /// cos(2π a / n)
    pub fn cos_2pi(a: i64, n: u32) -> Self {
        let half = Rat::new(1, 2);
        Self::reduce_raw(
            n,
            [(a.rem_euclid(n as i64) as u32, half.clone()), ((-a).rem_euclid(n as i64) as u32, half)].into_iter(),
        )
    }

    /// sin(2π a / n)
    pub fn sin_2pi(a: i64, n: u32) -> Self {
        // sin θ = -i (ζ^a - ζ^-a) / 2 with i = ζ_N^{N/4}
        let m = lcm_u32(n, 4);
        let s = (m / n) as i64;
        let quarter = (m / 4) as i64;
        let mm = m as i64;
        let half = Rat::new(1, 2);
        // -i ζ^a = ζ^{a + 3N/4}, +i ζ^{-a} = ζ^{-a + N/4}
        let raw = [
            ((a * s + 3 * quarter).rem_euclid(mm) as u32, half.clone()),
            ((-a * s + quarter).rem_euclid(mm) as u32, half),
        ];
        Self::reduce_raw(m, raw.into_iter())
    }

    pub fn sqrt2() -> Self {
        Self::cos_2pi(1, 8).mul_int(2)
    }

    pub fn sqrt3() -> Self {
        Self::cos_2pi(1, 12).mul_int(2)
    }

    pub fn sqrt5() -> Self {
        // 2(ζ₅ + ζ₅⁴) + 1
        &Self::cos_2pi(1, 5).mul_int(4) + &Self::one()
    }

    /// (1 + √5) / 2
    pub fn golden_ratio() -> Self {
        (&Self::sqrt5() + &Self::one()).mul_rat(&Rat::new(1, 2))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Canonical `(exponent, coefficient)` pairs, sorted by exponent.
    pub fn coefficients(&self) -> &[(u32, Rat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    /// The rational value, if this scalar is rational.
    pub fn as_rational(&self) -> Option<Rat> {
        match (self.conductor, self.terms.as_slice()) {
            (_, []) => Some(Rat::ZERO),
            (1, [(0, c)]) => Some(c.clone()),
            _ => None,
        }
    }

    fn lifted_terms(&self, n: u32) -> impl Iterator<Item = (u32, Rat)> + '_ {
        let s = n / self.conductor;
        self.terms.iter().map(move |(e, c)| (e * s, c.clone()))
    }

    /// The same value written at conductor `n` (a multiple of the stored
    /// conductor). Returned as raw exponent pairs.
    pub fn lift(&self, n: u32) -> Result<Vec<(u32, Rat)>, ArithError> {
        if n == 0 || n % self.conductor != 0 {
            return Err(ArithError::BadConductor(n));
        }
        Ok(self.lifted_terms(n).collect())
    }

    pub fn neg(&self) -> Self {
        ExactScalar { conductor: self.conductor, terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let n = lcm_u32(self.conductor, other.conductor);
        let mut terms: Vec<(u32, Rat)> = self.lifted_terms(n).collect();
        terms.extend(other.lifted_terms(n));
        Self::from_canonical(n, normalize_terms(terms))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul_rat(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        ExactScalar { conductor: self.conductor, terms: self.terms.iter().map(|(e, c)| (*e, c * r)).collect() }
    }

    pub fn mul_int(&self, k: i64) -> Self {
        self.mul_rat(&Rat::int(k))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some(r) = self.as_rational() {
            return other.mul_rat(&r);
        }
        if let Some(r) = other.as_rational() {
            return self.mul_rat(&r);
        }
        let n = lcm_u32(self.conductor, other.conductor);
        let sa = n / self.conductor;
        let sb = n / other.conductor;
        let mut raw = vec![Rat::ZERO; n as usize];
        for (x, c) in &self.terms {
            for (y, d) in &other.terms {
                let z = ((x * sa + y * sb) % n) as usize;
                raw[z] = &raw[z] + &(c * d);
            }
        }
        let ctx = context(n);
        let mut out = vec![Rat::ZERO; n as usize];
        for (z, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(b, s) in &ctx.expand[z] {
                let slot = &mut out[b as usize];
                *slot = if s > 0 { &*slot + c } else { &*slot - c };
            }
        }
        let terms = out.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(e, c)| (e as u32, c)).collect();
        Self::from_canonical(n, terms)
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// Image under the Galois automorphism ζ ↦ ζ^k (k coprime to the conductor).
    pub fn galois(&self, k: i64) -> Self {
        let n = self.conductor;
        if n == 1 {
            return self.clone();
        }
        Self::reduce_raw(
            n,
            self.terms.iter().map(|(e, c)| (((*e as i64) * k).rem_euclid(n as i64) as u32, c.clone())),
        )
    }

    /// Complex conjugate; equal to `self` for every constructed scalar.
    pub fn conjugate(&self) -> Self {
        self.galois(-1)
    }

    /// Multiplicative inverse via the norm from the real subfield:
    /// `α⁻¹ = Π_{σ≠1} σ(α) / N(α)` over representatives of `(Z/N)^× / ±1`.
    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::rational(r.recip()));
        }
        let n = self.conductor as i64;
        let mut cofactor = Self::one();
        for k in 2..=(n / 2) {
            if k.gcd(&n) == 1 {
                cofactor = cofactor.mul(&self.galois(k));
            }
        }
        let norm = self
            .mul(&cofactor)
            .as_rational()
            .expect("norm of a real cyclotomic element is rational");
        Ok(cofactor.mul_rat(&norm.recip()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, ArithError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn to_f64(&self) -> f64 {
        if self.terms.is_empty() {
            return 0.0;
        }
        let ctx = context(self.conductor);
        self.terms.iter().map(|(e, c)| c.to_f64() * ctx.cos[*e as usize]).sum()
    }

    /// Sign of the real value (−1, 0, 1). Never wrong: a double-precision
    /// evaluation is accepted only when it clears a rigorous error bound,
    /// otherwise the value is re-evaluated in fixed-point arithmetic with
    /// doubling precision until the bound clears.
    pub fn signum(&self) -> i32 {
        if self.terms.is_empty() {
            return 0;
        }
        if let Some(r) = self.as_rational() {
            return r.signum();
        }
        let ctx = context(self.conductor);
        let mut approx = 0.0f64;
        let mut mag = 0.0f64;
        for (e, c) in &self.terms {
            let cf = c.to_f64();
            approx += cf * ctx.cos[*e as usize];
            mag += cf.abs();
        }
        let err = mag * (self.terms.len() as f64 + 8.0) * 8.0 * f64::EPSILON;
        if approx.abs() > err && mag.is_finite() {
            return if approx > 0.0 { 1 } else { -1 };
        }
        precise::signum(self.conductor, &self.terms)
    }

    pub fn compare_to_zero(&self) -> std::cmp::Ordering {
        self.signum().cmp(&0)
    }

    /// Exact comparison.
    pub fn cmp_exact(&self, other: &Self) -> std::cmp::Ordering {
        self.sub(other).compare_to_zero()
    }
}

impl Default for ExactScalar {
    fn default() -> Self {
        ExactScalar::zero()
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let n = self.conductor;
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| if *e == 0 { format!("{c}") } else { format!("{c}*z{n}^{e}") })
            .collect();
        write!(f, "({})", parts.join(" + "))
    }
}

macro_rules! scalar_binop {
    ($tr:ident, $m:ident) => {
        impl<'a> std::ops::$tr<&'a ExactScalar> for &'a ExactScalar {
            type Output = ExactScalar;
            fn $m(self, rhs: &ExactScalar) -> ExactScalar {
                ExactScalar::$m(self, rhs)
            }
        }
        impl std::ops::$tr<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar::$m(&self, &rhs)
            }
        }
    };
}
scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);

impl std::ops::Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar::neg(self)
    }
}

impl std::ops::Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar::neg(&self)
    }
}

/// Fixed-point fallback for the sign of values too close to zero for f64.
mod precise {
    use super::*;

    /// π · 2^bits, truncated, with error < 2^4 units.
    fn pi_fixed(bits: u32) -> BigInt {
        // Machin: π = 16 atan(1/5) − 4 atan(1/239)
        let guard = bits + 16;
        let one = BigInt::one() << guard;
        let atan_inv = |k: i64| -> BigInt {
            let k = BigInt::from(k);
            let k2 = &k * &k;
            let mut power = &one / &k;
            let mut sum = power.clone();
            let mut n = 1i64;
            loop {
                power = &power / &k2;
                if power.is_zero() {
                    break;
                }
                let term = &power / (2 * n + 1);
                if n % 2 == 1 {
                    sum -= term;
                } else {
                    sum += term;
                }
                n += 1;
            }
            sum
        };
        let pi = atan_inv(5) * 16 - atan_inv(239) * 4;
        pi >> 16
    }

    /// cos(2π e / n) · 2^bits with absolute error below 2^6 units.
    fn cos_fixed(e: u32, n: u32, bits: u32, pi: &BigInt) -> BigInt {
        // reduce the angle to [0, π/2] exactly using symmetry on e/n
        let (num, den) = (4 * e as u64 % (4 * n as u64), 4 * n as u64);
        // angle = 2π num/den with num in [0, den); fold via quarter turns
        let q = num * 4 / den; // quadrant 0..3
        let rem = num * 4 - q * den; // angle within quadrant = (π/2) rem/den
        let (use_sin, sign) = match q {
            0 => (false, 1),
            1 => (true, -1),
            2 => (false, -1),
            _ => (true, 1),
        };
        let guard = bits + 16;
        let one = BigInt::one() << guard;
        let pi_g: BigInt = pi.clone() << 16usize;
        let x: BigInt = (&pi_g * BigInt::from(rem)) / (BigInt::from(den) * 2);
        // Taylor series at x in [0, π/2]
        let mut term = if use_sin { x.clone() } else { one.clone() };
        let mut sum = term.clone();
        let x2 = (&x * &x) >> guard;
        let mut k: i64 = if use_sin { 1 } else { 0 };
        loop {
            term = -((&term * &x2) >> guard) / ((k + 1) * (k + 2));
            k += 2;
            if term.is_zero() {
                break;
            }
            sum += &term;
        }
        let v: BigInt = sum >> 16;
        if sign < 0 {
            -v
        } else {
            v
        }
    }

    pub(super) fn signum(n: u32, terms: &[(u32, Rat)]) -> i32 {
        let mut bits = 128;
        loop {
            let pi = pi_fixed(bits + 8);
            let mut total = BigInt::zero();
            let mut err = BigInt::zero();
            for (e, c) in terms {
                let cosv = cos_fixed(*e, n, bits, &(pi.clone() >> 8));
                let num = c.numer();
                let den = c.denom();
                total += (&cosv * &num).div_floor(&den);
                // cos error ≤ 2^7 units (π truncation + series), scaled by |c|, plus floor
                err += (num.abs() * BigInt::from(256)).div_ceil(&den) + 1;
            }
            if total.abs() > err {
                return if total.is_positive() { 1 } else { -1 };
            }
            bits *= 2;
            assert!(bits <= 1 << 16, "sign certification did not converge; value appears to be zero");
        }
    }

    #[allow(dead_code)]
    pub(super) fn to_f64(v: &BigInt, bits: u32) -> f64 {
        v.to_f64().unwrap_or(f64::NAN) / 2f64.powi(bits as i32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64, d: i64) -> ExactScalar {
        ExactScalar::frac(n, d)
    }

    #[test]
    fn sqrt2_squares_to_two() {
        let r2 = ExactScalar::from_exponents(8, &[(1, Rat::ONE), (-1, Rat::ONE)]).unwrap();
        assert_eq!(r2, ExactScalar::sqrt2());
        assert_eq!(r2.square(), ExactScalar::int(2));
        assert_eq!(r2.conductor(), 8);
    }

    #[test]
    fn sqrt5_minimal_polynomial() {
        let v = ExactScalar::from_exponents(5, &[(1, Rat::int(2)), (4, Rat::int(2)), (0, Rat::ONE)]).unwrap();
        assert_eq!(v.square(), ExactScalar::int(5));
        assert_eq!(v, ExactScalar::sqrt5());
    }

    #[test]
    fn rational_embedding() {
        let v = ExactScalar::from_exponents(1, &[(0, Rat::new(3, 2))]).unwrap();
        assert_eq!(v.as_rational(), Some(Rat::new(3, 2)));
    }

    #[test]
    fn not_real_is_rejected() {
        assert_eq!(ExactScalar::from_exponents(4, &[(1, Rat::ONE)]), Err(ArithError::NotReal));
    }

    #[test]
    fn inverse_of_sqrt2() {
        let r2 = ExactScalar::sqrt2();
        assert!(r2.inv().unwrap().mul(&r2).is_one());
        assert_eq!(ExactScalar::zero().inv(), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn cos_two_pi_over_five() {
        let c = ExactScalar::cos_2pi(1, 5);
        let other = (ExactScalar::sqrt5() - ExactScalar::one()).mul_rat(&Rat::new(1, 4));
        assert_eq!(c, other);
    }

    #[test]
    fn signs() {
        assert_eq!((ExactScalar::sqrt2() - ExactScalar::one()).signum(), 1);
        assert_eq!((ExactScalar::one() - ExactScalar::sqrt2()).signum(), -1);
        assert_eq!(ExactScalar::cos_2pi(1, 3).signum(), -1);
        assert_eq!(ExactScalar::sin_2pi(3, 7).signum(), 1);
        assert_eq!(ExactScalar::sin_2pi(4, 7).signum(), -1);
    }

    #[test]
    fn sign_beyond_double_precision() {
        // 665857/470832 is a continued-fraction convergent of √2, above it by ~1.6e-12.
        // Square it so the gap is well below f64 resolution relative to the size.
        let p = Rat::new(665857, 470832);
        let diff = ExactScalar::sqrt2() - ExactScalar::rational(p.clone());
        assert_eq!(diff.signum(), -1);
        let tiny = diff.mul(&diff).mul(&diff); // ~ -4e-36
        assert_eq!(tiny.signum(), -1);
        assert_eq!(tiny.neg().signum(), 1);
        assert_eq!(precise::signum(tiny.conductor(), tiny.coefficients()), -1);
    }

    #[test]
    fn mixed_conductors() {
        let a = ExactScalar::sqrt2();
        let b = ExactScalar::sqrt3();
        let p = a.mul(&b);
        assert_eq!(p.conductor(), 24);
        assert_eq!(p.square(), ExactScalar::int(6));
        // √6 - √2√3 = 0 drops to conductor 1
        assert!(p.sub(&a.mul(&b)).is_zero());
        assert_eq!(p.sub(&p).conductor(), 1);
    }

    #[test]
    fn sin_and_cos_pythagoras() {
        for n in [5u32, 7, 9, 12, 22, 54] {
            for a in 0..n as i64 {
                let c = ExactScalar::cos_2pi(a, n);
                let sn = ExactScalar::sin_2pi(a, n);
                assert!((c.square() + sn.square()).is_one(), "n={n} a={a}");
                let want = (2.0 * std::f64::consts::PI * a as f64 / n as f64).sin();
                assert!((sn.to_f64() - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn inverse_in_larger_field() {
        let x = ExactScalar::cos_2pi(1, 9).add(&s(1, 3));
        let y = x.inv().unwrap();
        assert!(x.mul(&y).is_one());
    }

    #[test]
    fn golden_ratio_identity() {
        let phi = ExactScalar::golden_ratio();
        assert_eq!(phi.square(), phi.add(&ExactScalar::one()));
        assert_eq!(phi.inv().unwrap(), phi.sub(&ExactScalar::one()));
    }
}
