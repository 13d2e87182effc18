//! Exact arithmetic over GF(p^m).
//!
//! A [`FieldSpec`] owns the representation of one finite field: the prime
//! characteristic `p`, the extension degree `m`, a monic irreducible modulus
//! of degree `m` over GF(p), and exp/log tables over a primitive element used
//! for multiplication and inversion.
//!
//! Elements are stored as the integer encoding of their coefficient vector,
//! `value = c_0 + c_1*p + ... + c_{m-1}*p^{m-1}`, which also fixes the
//! canonical enumeration order used everywhere downstream (vertex labels,
//! canonical representatives, primitive-element selection). The modulus is
//! the irreducible monic polynomial with the smallest such encoding, so two
//! runs always agree on the representation.

use crate::error::{Error, Result};

/// Largest supported field order. Guards the exp/log table storage.
pub const SIZE_CAP: u64 = 1 << 20;

/// An element of a specific finite field.
///
/// The element remembers which field it belongs to (`tag`), so that
/// operations mixing elements of different fields fail loudly instead of
/// producing garbage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement {
    tag: u32,
    value: u32,
}

impl FieldElement {
    /// Integer encoding of the coefficient vector (base-p digits, low order
    /// first). Doubles as the canonical enumeration index of the element.
    pub fn value(self) -> u64 {
        self.value as u64
    }
}

/// Arithmetic context for one field GF(p^m), q = p^m.
#[derive(Debug, Clone)]
pub struct FieldSpec {
    p: u64,
    m: u32,
    q: u64,
    /// Monic irreducible modulus, coefficients low order first, length m+1.
    /// For m = 1 this is `x` itself: plain arithmetic mod p.
    modulus: Vec<u64>,
    tag: u32,
    /// exp[i] = xi^i for i in 0..q-1, where xi is the primitive element.
    exp: Vec<u32>,
    /// log[e] = i with exp[i] = e, for nonzero e. log[0] is unused.
    log: Vec<u32>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of n.
fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut fs = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            fs.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        fs.push(n);
    }
    fs
}

/// Polynomial helpers over GF(p), coefficients low order first.
mod poly {
    /// c <- a*b reduced modulo the monic `modulus`.
    pub fn mul_mod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
        let m = modulus.len() - 1;
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        // Reduce by the monic modulus.
        while prod.len() > m {
            let lead = *prod.last().unwrap();
            let top = prod.len() - 1;
            if lead != 0 {
                for (k, &mc) in modulus.iter().enumerate() {
                    let idx = top - (modulus.len() - 1) + k;
                    prod[idx] = (prod[idx] + (p - lead % p) % p * mc) % p;
                }
            }
            prod.pop();
        }
        prod.resize(m.max(1), 0);
        prod
    }

    /// Does the monic polynomial `d` divide the monic polynomial `f`?
    pub fn divides(d: &[u64], f: &[u64], p: u64) -> bool {
        let mut rem: Vec<u64> = f.to_vec();
        while rem.len() >= d.len() {
            let lead = *rem.last().unwrap();
            if lead != 0 {
                let shift = rem.len() - d.len();
                for (k, &dc) in d.iter().enumerate() {
                    rem[shift + k] = (rem[shift + k] + (p - lead % p) % p * dc) % p;
                }
            }
            rem.pop();
        }
        rem.iter().all(|&c| c == 0)
    }
}

impl FieldSpec {
    /// Build GF(p^m). Errors if p is not prime, m < 1, or p^m exceeds
    /// [`SIZE_CAP`].
    pub fn create(p: u64, m: u32) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::precondition(format!("{p} is not prime")));
        }
        if m < 1 {
            return Err(Error::precondition("extension degree m must be >= 1"));
        }
        let mut q: u64 = 1;
        for _ in 0..m {
            q = q
                .checked_mul(p)
                .filter(|&v| v <= SIZE_CAP)
                .ok_or_else(|| Error::precondition(format!("p^m exceeds the size cap {SIZE_CAP}")))?;
        }
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            lowest_irreducible(p, m)
        };
        let tag = field_tag(p, m);
        let mut spec = FieldSpec {
            p,
            m,
            q,
            modulus,
            tag,
            exp: Vec::new(),
            log: Vec::new(),
        };
        spec.build_tables();
        Ok(spec)
    }

    /// Build GF(q) for a prime power q, factoring q automatically.
    pub fn create_order(q: u64) -> Result<FieldSpec> {
        let (p, m) =
            factor_prime_power(q).ok_or_else(|| Error::precondition(format!("{q} is not a prime power")))?;
        FieldSpec::create(p, m)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Field order q = p^m.
    pub fn order(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients, low order first, monic of degree m.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The element with the given encoding. Panics if `value >= q`.
    pub fn element(&self, value: u64) -> FieldElement {
        assert!(value < self.q, "element encoding {value} out of range for GF({})", self.q);
        FieldElement {
            tag: self.tag,
            value: value as u32,
        }
    }

    /// Element from a coefficient vector (low order first). Shorter vectors
    /// are zero padded; all coefficients are reduced mod p.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> FieldElement {
        assert!(coeffs.len() <= self.m as usize, "too many coefficients");
        let mut value = 0u64;
        let mut pk = 1u64;
        for i in 0..self.m as usize {
            let c = coeffs.get(i).copied().unwrap_or(0) % self.p;
            value += c * pk;
            pk *= self.p;
        }
        self.element(value)
    }

    /// Coefficient vector of an element, low order first, length m.
    pub fn coeffs(&self, e: FieldElement) -> Vec<u64> {
        self.check(e);
        let mut v = e.value as u64;
        (0..self.m)
            .map(|_| {
                let c = v % self.p;
                v /= self.p;
                c
            })
            .collect()
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// All q elements in canonical enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(move |v| self.element(v))
    }

    fn check(&self, e: FieldElement) {
        assert_eq!(e.tag, self.tag, "element belongs to a different field");
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        if self.m == 1 {
            return self.element((a.value() + b.value()) % self.p);
        }
        let mut value = 0u64;
        let (mut va, mut vb, mut pk) = (a.value(), b.value(), 1u64);
        for _ in 0..self.m {
            value += (va % self.p + vb % self.p) % self.p * pk;
            va /= self.p;
            vb /= self.p;
            pk *= self.p;
        }
        self.element(value)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.check(a);
        if self.m == 1 {
            return self.element((self.p - a.value()) % self.p);
        }
        let mut value = 0u64;
        let (mut va, mut pk) = (a.value(), 1u64);
        for _ in 0..self.m {
            value += (self.p - va % self.p) % self.p * pk;
            va /= self.p;
            pk *= self.p;
        }
        self.element(value)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        if a.value == 0 || b.value == 0 {
            return self.zero();
        }
        let la = self.log[a.value as usize] as u64;
        let lb = self.log[b.value as usize] as u64;
        self.element(self.exp[((la + lb) % (self.q - 1)) as usize] as u64)
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        self.check(a);
        if a.value == 0 {
            return Err(Error::precondition("inversion of zero"));
        }
        let la = self.log[a.value as usize] as u64;
        Ok(self.element(self.exp[((self.q - 1 - la) % (self.q - 1)) as usize] as u64))
    }

    /// a^n for n >= 0, with a^0 = 1 (including 0^0 = 1).
    pub fn pow(&self, a: FieldElement, n: u64) -> FieldElement {
        self.check(a);
        if a.value == 0 {
            return if n == 0 { self.one() } else { self.zero() };
        }
        let la = self.log[a.value as usize] as u64;
        let e = (la % (self.q - 1)) as u128 * (n % (self.q - 1)) as u128 % (self.q - 1) as u128;
        self.element(self.exp[e as usize] as u64)
    }

    /// Discrete logarithm with respect to the primitive element: the i with
    /// xi^i = a. Errors on zero.
    pub fn dlog(&self, a: FieldElement) -> Result<u64> {
        self.check(a);
        if a.value == 0 {
            return Err(Error::precondition("zero has no discrete logarithm"));
        }
        Ok(self.log[a.value as usize] as u64)
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: FieldElement) -> Result<u64> {
        self.check(a);
        if a.value == 0 {
            return Err(Error::precondition("zero has no multiplicative order"));
        }
        let la = self.log[a.value as usize] as u64;
        Ok((self.q - 1) / gcd(la, self.q - 1))
    }

    /// The primitive element: the first element in enumeration order whose
    /// multiplicative order is q-1. Requires q >= 3.
    pub fn primitive_element(&self) -> Result<FieldElement> {
        if self.q < 3 {
            return Err(Error::precondition("primitive element requires q >= 3"));
        }
        Ok(self.element(self.exp[1] as u64))
    }

    /// The set {x^2 : x != 0}, in enumeration order. For odd q this has
    /// (q-1)/2 members; in characteristic 2 squaring is a bijection and the
    /// set is all of GF(q) \ {0}.
    pub fn nonzero_squares(&self) -> Vec<FieldElement> {
        let mut values: Vec<u64> = if self.p == 2 {
            (1..self.q).collect()
        } else {
            let mut seen = vec![false; self.q as usize];
            for e in 1..self.q {
                let sq = self.mul(self.element(e), self.element(e));
                seen[sq.value as usize] = true;
            }
            (1..self.q).filter(|&v| seen[v as usize]).collect()
        };
        values.sort_unstable();
        values.into_iter().map(|v| self.element(v)).collect()
    }

    /// Render an element the way labels do: the plain encoding for prime
    /// fields, the coefficient digits (high order first) otherwise.
    pub fn render(&self, e: FieldElement) -> String {
        self.check(e);
        if self.m == 1 {
            format!("{}", e.value)
        } else {
            let cs = self.coeffs(e);
            cs.iter().rev().map(|c| c.to_string()).collect::<Vec<_>>().join("")
        }
    }

    fn build_tables(&mut self) {
        // Bootstrap: find the first generator in enumeration order using
        // polynomial arithmetic, checking order q-1 through the prime
        // factorization of q-1.
        let q = self.q;
        if q == 2 {
            self.exp = vec![1];
            self.log = vec![0, 0];
            return;
        }
        let factors = prime_factors(q - 1);
        let xi_value = (1..q)
            .find(|&cand| {
                let c = self.decode_raw(cand);
                factors.iter().all(|&f| self.poly_pow(&c, (q - 1) / f) != vec_one(self.m))
            })
            .expect("every finite field has a primitive element");
        let xi = self.decode_raw(xi_value);
        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut log = vec![0u32; q as usize];
        let mut cur = vec_one(self.m);
        for i in 0..(q - 1) {
            let value = self.encode_raw(&cur);
            exp.push(value as u32);
            log[value as usize] = i as u32;
            cur = poly::mul_mod(&cur, &xi, &self.modulus, self.p);
        }
        debug_assert_eq!(self.encode_raw(&cur), 1, "xi^(q-1) must be 1");
        self.exp = exp;
        self.log = log;
    }

    fn decode_raw(&self, mut v: u64) -> Vec<u64> {
        (0..self.m)
            .map(|_| {
                let c = v % self.p;
                v /= self.p;
                c
            })
            .collect()
    }

    fn encode_raw(&self, c: &[u64]) -> u64 {
        let mut value = 0;
        for &ci in c.iter().rev() {
            value = value * self.p + ci;
        }
        value
    }

    fn poly_pow(&self, base: &[u64], mut n: u64) -> Vec<u64> {
        let mut result = vec_one(self.m);
        let mut b = base.to_vec();
        while n > 0 {
            if n & 1 == 1 {
                result = poly::mul_mod(&result, &b, &self.modulus, self.p);
            }
            b = poly::mul_mod(&b, &b, &self.modulus, self.p);
            n >>= 1;
        }
        result
    }
}

fn vec_one(m: u32) -> Vec<u64> {
    let mut v = vec![0u64; m as usize];
    v[0] = 1;
    v
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn field_tag(p: u64, m: u32) -> u32 {
    // The modulus is a deterministic function of (p, m), so (p, m) identifies
    // the field.
    ((p as u32) << 6) | m
}

/// Factor q as p^m with p prime. Returns None if q is not a prime power.
pub fn factor_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut m = 0;
            let mut t = q;
            while t % p == 0 {
                t /= p;
                m += 1;
            }
            return if t == 1 { Some((p, m)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

/// The monic irreducible polynomial of degree m over GF(p) whose non-leading
/// coefficient vector has the smallest base-p integer encoding.
fn lowest_irreducible(p: u64, m: u32) -> Vec<u64> {
    let mut count = 1u64;
    for _ in 0..m {
        count *= p;
    }
    'next: for enc in 0..count {
        let mut c: Vec<u64> = Vec::with_capacity(m as usize + 1);
        let mut v = enc;
        for _ in 0..m {
            c.push(v % p);
            v /= p;
        }
        c.push(1);
        if c[0] == 0 {
            continue; // divisible by x
        }
        // Trial division by every monic polynomial of degree 1..=m/2.
        for d in 1..=(m / 2).max(1) {
            let mut dcount = 1u64;
            for _ in 0..d {
                dcount *= p;
            }
            for denc in 0..dcount {
                let mut dc: Vec<u64> = Vec::with_capacity(d as usize + 1);
                let mut dv = denc;
                for _ in 0..d {
                    dc.push(dv % p);
                    dv /= p;
                }
                dc.push(1);
                if poly::divides(&dc, &c, p) {
                    continue 'next;
                }
            }
        }
        return c;
    }
    unreachable!("irreducible polynomials of every degree exist over GF(p)")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn create_rejects_bad_parameters() {
        assert!(FieldSpec::create(6, 1).is_err());
        assert!(FieldSpec::create(2, 0).is_err());
        assert!(FieldSpec::create(2, 21).is_err()); // 2^21 over cap
        assert!(FieldSpec::create_order(12).is_err());
    }

    #[test]
    fn gf2_is_plain_mod2() {
        let f = FieldSpec::create(2, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.add(f.one(), f.one()), f.zero());
    }

    #[test]
    fn gf4_modulus_and_reduction() {
        let f = FieldSpec::create(2, 2).unwrap();
        // x^2 + x + 1 is the only monic irreducible quadratic over GF(2).
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let x = f.from_coeffs(&[0, 1]);
        let x_plus_1 = f.from_coeffs(&[1, 1]);
        assert_eq!(f.mul(x, x), x_plus_1);
        assert_eq!(f.elements().count(), 4);
    }

    #[test]
    fn gf9_has_nine_elements() {
        let f = FieldSpec::create(3, 2).unwrap();
        assert_eq!(f.order(), 9);
        let all: std::collections::BTreeSet<_> = f.elements().collect();
        assert_eq!(all.len(), 9);
    }

    #[test]
    fn gf5_inverse_of_two_is_three() {
        let f = FieldSpec::create(5, 1).unwrap();
        assert_eq!(f.inv(f.element(2)).unwrap(), f.element(3));
        assert!(f.inv(f.zero()).is_err());
    }

    #[test]
    fn primitive_elements_match_enumeration_order() {
        let f5 = FieldSpec::create(5, 1).unwrap();
        assert_eq!(f5.primitive_element().unwrap(), f5.element(2));
        let f7 = FieldSpec::create(7, 1).unwrap();
        assert_eq!(f7.primitive_element().unwrap(), f7.element(3));
        // GF(4): elements in encoding order are 0, 1, x, x+1; x is the first
        // with order 3.
        let f4 = FieldSpec::create(2, 2).unwrap();
        assert_eq!(f4.primitive_element().unwrap(), f4.from_coeffs(&[0, 1]));
    }

    #[test]
    fn primitive_element_generates_everything() {
        for q in [3u64, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32] {
            let f = FieldSpec::create_order(q).unwrap();
            let xi = f.primitive_element().unwrap();
            let mut seen = std::collections::BTreeSet::new();
            let mut cur = f.one();
            for _ in 0..(q - 1) {
                seen.insert(cur);
                cur = f.mul(cur, xi);
            }
            assert_eq!(cur, f.one(), "xi^(q-1) = 1 in GF({q})");
            assert_eq!(seen.len() as u64, q - 1, "powers of xi cover GF({q})*");
        }
    }

    #[test]
    fn nonzero_squares_examples() {
        let f5 = FieldSpec::create(5, 1).unwrap();
        let sq5: Vec<u64> = f5.nonzero_squares().iter().map(|e| e.value()).collect();
        assert_eq!(sq5, vec![1, 4]);

        let f13 = FieldSpec::create(13, 1).unwrap();
        let sq13: Vec<u64> = f13.nonzero_squares().iter().map(|e| e.value()).collect();
        assert_eq!(sq13, vec![1, 3, 4, 9, 10, 12]);

        let f9 = FieldSpec::create(3, 2).unwrap();
        assert_eq!(f9.nonzero_squares().len(), 4);
    }

    #[test]
    fn square_count_follows_parity() {
        for q in [3u64, 5, 7, 9, 11, 13, 25, 27] {
            let f = FieldSpec::create_order(q).unwrap();
            assert_eq!(f.nonzero_squares().len() as u64, (q - 1) / 2);
        }
        for q in [2u64, 4, 8, 16, 32, 64] {
            let f = FieldSpec::create_order(q).unwrap();
            assert_eq!(f.nonzero_squares().len() as u64, q - 1);
        }
    }

    /// Field axioms, exhaustive for small q, randomized above.
    #[test]
    fn field_axioms() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64] {
            let f = FieldSpec::create_order(q).unwrap();
            if q <= 64 {
                let els: Vec<_> = f.elements().collect();
                for &a in &els {
                    for &b in &els {
                        assert_eq!(f.add(a, b), f.add(b, a));
                        assert_eq!(f.mul(a, b), f.mul(b, a));
                        for &c in &els {
                            assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                            assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                            assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        }
                    }
                    if a != f.zero() {
                        assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                    }
                }
            }
        }
        // Larger fields: randomized triples.
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for q in [81u64, 121, 128, 243, 256, 1024] {
            let f = FieldSpec::create_order(q).unwrap();
            for _ in 0..10_000 {
                let a = f.element(rng.gen_range(0..q));
                let b = f.element(rng.gen_range(0..q));
                let c = f.element(rng.gen_range(0..q));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                if a != f.zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
            }
        }
    }

    #[test]
    #[should_panic(expected = "different field")]
    fn mixed_field_operands_panic() {
        let f5 = FieldSpec::create(5, 1).unwrap();
        let f7 = FieldSpec::create(7, 1).unwrap();
        let _ = f5.add(f5.element(1), f7.element(1));
    }
}
