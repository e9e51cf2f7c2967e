//! Arithmetic in GF(p^t) using polynomial-basis coordinates.
//!
//! Elements are also addressed by an integer index `sum coeff[j] * p^j`, which is
//! what the geometry generators use; small fields get precomputed add/mul tables.

use crate::error::{Error, Result};

const TABLE_LIMIT: u64 = 256;

/// Default irreducible polynomials, constant term first.
const DEFAULT_IRREDUCIBLES: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (3, 2, &[1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (5, 2, &[1, 1, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
];

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^t` when it is a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while !q.is_multiple_of(p) {
        p += 1;
    }
    let (mut rest, mut t) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        t += 1;
    }
    (rest == 1).then_some((p as u32, t))
}

/// A finite field GF(p^t) fixed by a monic irreducible polynomial.
#[derive(Debug, Clone)]
pub struct FieldSpec {
    p: u32,
    t: u32,
    irreducible: Vec<u32>,
    q: u64,
    id: u64,
    add: Vec<u32>,
    mul: Vec<u32>,
}

/// An element of a [`FieldSpec`], stored as coefficients in the polynomial basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coeffs: Vec<u32>,
    spec_id: u64,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Mul,
    Inv,
    Pow,
}

/// Second operand of [`FieldSpec::arith`].
#[derive(Debug, Clone)]
pub enum Operand {
    Element(FieldElement),
    Int(u64),
}

fn poly_rem(mut a: Vec<u32>, m: &[u32], p: u32) -> Vec<u32> {
    // m is monic
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = *a.last().unwrap();
        if lead != 0 {
            let shift = a.len() - 1 - dm;
            for (j, &c) in m.iter().enumerate() {
                let idx = shift + j;
                a[idx] = (a[idx] + p - (lead * c) % p) % p;
            }
        }
        a.pop();
    }
    a
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let (mut b, mut e) = (a as u64 % p as u64, p as u64 - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let t = poly.len() - 1;
    for d in 1..=t / 2 {
        let count = (p as u64).pow(d as u32);
        for n in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut x = n;
            for _ in 0..d {
                div.push((x % p as u64) as u32);
                x /= p as u64;
            }
            div.push(1);
            if poly_rem(poly.to_vec(), &div, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// Builds GF(p^t). Without an explicit polynomial, a built-in default is used
    /// for orders up to 32 (t = 1 needs none).
    pub fn new(p: u32, t: u32, irreducible: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NonPrimeModulus(p));
        }
        if t == 0 {
            return Err(Error::BadDimension(
                "extension degree must be at least 1".into(),
            ));
        }
        let q = (p as u64).checked_pow(t).ok_or(Error::NoField(u64::MAX))?;
        let poly: Vec<u32> = match irreducible {
            Some(poly) => {
                if poly.len() != t as usize + 1 || poly.iter().any(|&c| c >= p) {
                    return Err(Error::ReduciblePolynomial);
                }
                let lead = poly[t as usize];
                if lead == 0 {
                    return Err(Error::ReduciblePolynomial);
                }
                let li = inv_mod(lead, p);
                poly.iter()
                    .map(|&c| (c as u64 * li as u64 % p as u64) as u32)
                    .collect()
            }
            None if t == 1 => vec![0, 1],
            None => DEFAULT_IRREDUCIBLES
                .iter()
                .find(|(pp, tt, _)| *pp == p && *tt == t)
                .map(|(_, _, poly)| poly.to_vec())
                .ok_or(Error::NoDefaultIrreducible(q))?,
        };
        if !is_irreducible(&poly, p) {
            return Err(Error::ReduciblePolynomial);
        }
        let mut id = 0xcbf2_9ce4_8422_2325u64;
        for v in [p, t].iter().chain(poly.iter()) {
            id ^= *v as u64;
            id = id.wrapping_mul(0x0100_0000_01b3);
        }
        let mut spec = FieldSpec {
            p,
            t,
            irreducible: poly,
            q,
            id,
            add: Vec::new(),
            mul: Vec::new(),
        };
        if q <= TABLE_LIMIT {
            let n = q as usize;
            let mut add = vec![0u32; n * n];
            let mut mul = vec![0u32; n * n];
            for a in 0..n {
                let ea = spec.from_index(a as u64);
                for b in 0..n {
                    let eb = spec.from_index(b as u64);
                    add[a * n + b] = spec.to_index(&spec.raw_add(&ea.coeffs, &eb.coeffs)) as u32;
                    mul[a * n + b] = spec.to_index(&spec.raw_mul(&ea.coeffs, &eb.coeffs)) as u32;
                }
            }
            spec.add = add;
            spec.mul = mul;
        }
        Ok(spec)
    }

    /// GF(q) with the default polynomial, for any supported prime power `q`.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, t) = prime_power(q).ok_or(Error::NoField(q))?;
        FieldSpec::new(p, t, None).map_err(|e| match e {
            Error::NoDefaultIrreducible(_) => Error::NoField(q),
            other => other,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn irreducible(&self) -> &[u32] {
        &self.irreducible
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: vec![0; self.t as usize],
            spec_id: self.id,
        }
    }

    pub fn one(&self) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = 1;
        e
    }

    /// Element with the given polynomial-basis coordinates (reduced mod p).
    pub fn element(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.t as usize {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for degree {}",
                coeffs.len(),
                self.t
            )));
        }
        let mut c: Vec<u32> = coeffs.iter().map(|&x| x % self.p).collect();
        c.resize(self.t as usize, 0);
        Ok(FieldElement {
            coeffs: c,
            spec_id: self.id,
        })
    }

    pub fn from_index(&self, mut index: u64) -> FieldElement {
        let mut coeffs = Vec::with_capacity(self.t as usize);
        for _ in 0..self.t {
            coeffs.push((index % self.p as u64) as u32);
            index /= self.p as u64;
        }
        FieldElement {
            coeffs,
            spec_id: self.id,
        }
    }

    pub fn to_index(&self, coeffs: &[u32]) -> u64 {
        coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.p as u64 + c as u64)
    }

    pub fn index_of(&self, e: &FieldElement) -> u64 {
        self.to_index(&e.coeffs)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(|i| self.from_index(i))
    }

    fn raw_add(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| (x + y) % self.p).collect()
    }

    fn raw_mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut prod = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let mut r = poly_rem(prod, &self.irreducible, self.p);
        r.resize(self.t as usize, 0);
        r
    }

    fn check(&self, e: &FieldElement) -> Result<()> {
        if e.spec_id != self.id {
            return Err(Error::SpecMismatch);
        }
        Ok(())
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(FieldElement {
            coeffs: self.raw_add(&a.coeffs, &b.coeffs),
            spec_id: self.id,
        })
    }

    pub fn neg(&self, a: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        let coeffs = a.coeffs.iter().map(|&c| (self.p - c) % self.p).collect();
        Ok(FieldElement {
            coeffs,
            spec_id: self.id,
        })
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(FieldElement {
            coeffs: self.raw_mul(&a.coeffs, &b.coeffs),
            spec_id: self.id,
        })
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> Result<FieldElement> {
        self.check(a)?;
        let mut result = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                result.coeffs = self.raw_mul(&result.coeffs, &base.coeffs);
            }
            base.coeffs = self.raw_mul(&base.coeffs, &base.coeffs);
            e >>= 1;
        }
        Ok(result)
    }

    /// Inverse via a^(q-2).
    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        self.pow(a, self.q - 2)
    }

    /// Single entry point for the four operations.
    pub fn arith(&self, op: FieldOp, a: &FieldElement, b: &Operand) -> Result<FieldElement> {
        match (op, b) {
            (FieldOp::Add, Operand::Element(b)) => self.add(a, b),
            (FieldOp::Mul, Operand::Element(b)) => self.mul(a, b),
            (FieldOp::Inv, _) => self.inv(a),
            (FieldOp::Pow, Operand::Int(e)) => self.pow(a, *e),
            (FieldOp::Add | FieldOp::Mul, Operand::Int(_))
            | (FieldOp::Pow, Operand::Element(_)) => Err(Error::WrongParameters(format!(
                "operand kind does not fit {op:?}"
            ))),
        }
    }

    // Index-based fast paths used by the geometry generators.

    pub fn add_idx(&self, a: u32, b: u32) -> u32 {
        if self.add.is_empty() {
            let r = self.raw_add(
                &self.from_index(a as u64).coeffs,
                &self.from_index(b as u64).coeffs,
            );
            self.to_index(&r) as u32
        } else {
            self.add[a as usize * self.q as usize + b as usize]
        }
    }

    pub fn mul_idx(&self, a: u32, b: u32) -> u32 {
        if self.mul.is_empty() {
            let r = self.raw_mul(
                &self.from_index(a as u64).coeffs,
                &self.from_index(b as u64).coeffs,
            );
            self.to_index(&r) as u32
        } else {
            self.mul[a as usize * self.q as usize + b as usize]
        }
    }

    pub fn neg_idx(&self, a: u32) -> u32 {
        (0..self.q as u32)
            .find(|&b| self.add_idx(a, b) == 0)
            .unwrap()
    }

    pub fn inv_idx(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| {
            (1..self.q as u32)
                .find(|&b| self.mul_idx(a, b) == 1)
                .unwrap()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_gf2() {
        let f = FieldSpec::new(2, 1, None).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.elements().count(), 2);
    }

    #[test]
    fn gf4_default_has_no_root() {
        let f = FieldSpec::new(2, 2, None).unwrap();
        assert_eq!(f.irreducible(), &[1, 1, 1]);
        // x^2 + x + 1 evaluated at 0 and 1 over GF(2)
        for x in 0..2u32 {
            assert_ne!((x * x + x + 1) % 2, 0);
        }
    }

    #[test]
    fn reducible_rejected() {
        assert_eq!(
            FieldSpec::new(2, 2, Some(&[1, 0, 1])).unwrap_err(),
            Error::ReduciblePolynomial
        );
        assert_eq!(
            FieldSpec::new(4, 1, None).unwrap_err(),
            Error::NonPrimeModulus(4)
        );
        assert_eq!(
            FieldSpec::new(2, 6, None).unwrap_err(),
            Error::NoDefaultIrreducible(64)
        );
    }

    #[test]
    fn defaults_are_irreducible() {
        for &(p, t, poly) in DEFAULT_IRREDUCIBLES {
            assert!(is_irreducible(poly, p), "GF({p}^{t})");
        }
    }

    #[test]
    fn gf4_mul_and_inv() {
        let f = FieldSpec::new(2, 2, None).unwrap();
        let x = f.element(&[0, 1]).unwrap();
        let x_plus_1 = f.element(&[1, 1]).unwrap();
        assert_eq!(f.mul(&x, &x).unwrap(), x_plus_1);
        // exhaustive search for y with x*y = 1
        let y = f
            .elements()
            .find(|y| f.mul(&x, y).unwrap() == f.one())
            .unwrap();
        assert_eq!(y, x_plus_1);
        assert_eq!(f.inv(&x).unwrap(), y);
        assert_eq!(f.arith(FieldOp::Inv, &x, &Operand::Int(0)).unwrap(), y);
        assert_eq!(f.inv(&f.zero()).unwrap_err(), Error::ZeroInverse);
    }

    #[test]
    fn spec_mismatch() {
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        let f8 = FieldSpec::new(2, 3, None).unwrap();
        let a = f4.one();
        let b = f8.one();
        assert_eq!(f4.add(&a, &b).unwrap_err(), Error::SpecMismatch);
    }

    #[test]
    fn additive_identity() {
        let f = FieldSpec::new(3, 2, None).unwrap();
        for a in f.elements() {
            assert_eq!(f.add(&a, &f.zero()).unwrap(), a);
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for (p, t) in [(2, 2), (2, 3), (3, 2)] {
            let f = FieldSpec::new(p, t, None).unwrap();
            let els: Vec<_> = f.elements().collect();
            for a in &els {
                if !a.is_zero() {
                    assert_eq!(f.mul(a, &f.inv(a).unwrap()).unwrap(), f.one());
                }
                for b in &els {
                    assert_eq!(f.mul(a, b).unwrap(), f.mul(b, a).unwrap());
                    for c in &els {
                        let ab_c = f.mul(&f.mul(a, b).unwrap(), c).unwrap();
                        let a_bc = f.mul(a, &f.mul(b, c).unwrap()).unwrap();
                        assert_eq!(ab_c, a_bc);
                        let l = f.mul(a, &f.add(b, c).unwrap()).unwrap();
                        let r = f.add(&f.mul(a, b).unwrap(), &f.mul(a, c).unwrap()).unwrap();
                        assert_eq!(l, r);
                        let s1 = f.add(&f.add(a, b).unwrap(), c).unwrap();
                        let s2 = f.add(a, &f.add(b, c).unwrap()).unwrap();
                        assert_eq!(s1, s2);
                    }
                }
            }
        }
    }

    #[test]
    fn index_tables_agree() {
        let f = FieldSpec::new(2, 3, None).unwrap();
        for a in 0..8u32 {
            for b in 0..8u32 {
                let ea = f.from_index(a as u64);
                let eb = f.from_index(b as u64);
                assert_eq!(
                    f.mul_idx(a, b) as u64,
                    f.index_of(&f.mul(&ea, &eb).unwrap())
                );
            }
            if a != 0 {
                assert_eq!(f.mul_idx(a, f.inv_idx(a).unwrap()), 1);
            }
            assert_eq!(f.add_idx(a, f.neg_idx(a)), 0);
        }
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(4), Some((2, 2)));
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
    }
}
