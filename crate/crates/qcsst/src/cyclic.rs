//! Cyclic codes over GF(2) and the divisor lattice of `x^n - 1`.
//!
//! For odd `n` the polynomial `x^n - 1` is squarefree, and its irreducible
//! factors correspond to the cyclotomic cosets of 2 modulo `n`. Each factor is
//! computed as the minimal polynomial of `alpha^s` over GF(2), where `alpha`
//! is an element of order `n` in GF(2^m) and `m` is the multiplicative order
//! of 2 modulo `n`. Polynomials are encoded low-degree-first: bit `i` is the
//! coefficient of `x^i`.

use crate::code::LinearCode;
use crate::gf2::{BitMatrix, BitVector};
use crate::{Error, Result};

/// Dense GF(2) polynomial with coefficient of `x^i` in bit `i`.
/// Degrees stay below 128 for every length handled here.
type Poly = u128;

fn poly_deg(p: Poly) -> Option<u32> {
    if p == 0 {
        None
    } else {
        Some(127 - p.leading_zeros())
    }
}

fn poly_rem(mut a: Poly, b: Poly) -> Poly {
    let db = poly_deg(b).expect("division by zero polynomial");
    while let Some(da) = poly_deg(a) {
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}

fn poly_from_bits(bits: &BitVector) -> Poly {
    let mut p: Poly = 0;
    for i in bits.support() {
        assert!(i < 128);
        p |= 1 << i;
    }
    p
}

fn poly_to_bits(p: Poly) -> BitVector {
    let deg = poly_deg(p).unwrap_or(0) as usize;
    let mut v = BitVector::zeros(deg + 1);
    for i in 0..=deg {
        if (p >> i) & 1 == 1 {
            v.set(i, true);
        }
    }
    v
}

fn primes(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Cyclotomic cosets of 2 modulo `n`, each sorted ascending, listed by
/// smallest representative.
pub fn cyclotomic_cosets(n: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut cosets = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut coset = Vec::new();
        let mut j = s;
        while !seen[j] {
            seen[j] = true;
            coset.push(j);
            j = (2 * j) % n;
        }
        coset.sort_unstable();
        cosets.push(coset);
    }
    cosets
}

/// Small binary extension field GF(2^m) with elements packed in `u64`.
struct Gf2m {
    m: u32,
    modulus: u64,
}

impl Gf2m {
    /// Build GF(2^m) over the first irreducible polynomial of degree `m`
    /// in numeric order (deterministic).
    fn new(m: u32) -> Gf2m {
        assert!((1..=30).contains(&m));
        if m == 1 {
            return Gf2m { m, modulus: 0b10 };
        }
        let mut candidate = (1u64 << m) | 1;
        loop {
            if is_irreducible(candidate, m) {
                return Gf2m {
                    m,
                    modulus: candidate,
                };
            }
            candidate += 2;
        }
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        // Carry-less multiply then reduce.
        let mut prod: u128 = 0;
        let mut x = a as u128;
        let mut y = b;
        while y != 0 {
            if y & 1 == 1 {
                prod ^= x;
            }
            x <<= 1;
            y >>= 1;
        }
        let modulus = self.modulus as u128;
        while let Some(d) = poly_deg(prod) {
            if d < self.m {
                break;
            }
            prod ^= modulus << (d - self.m);
        }
        prod as u64
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        while exp != 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// An element of multiplicative order exactly `n`; `n` must divide
    /// `2^m - 1`. Deterministic: tries field elements in numeric order.
    fn element_of_order(&self, n: u64) -> u64 {
        let group = (1u64 << self.m) - 1;
        assert_eq!(group % n, 0);
        let cofactor = group / n;
        let prime_list = primes(n as usize);
        for raw in 2..=group {
            let alpha = self.pow(raw, cofactor);
            if alpha == 1 {
                continue;
            }
            if prime_list
                .iter()
                .all(|&p| self.pow(alpha, n / p as u64) != 1)
            {
                return alpha;
            }
        }
        unreachable!("cyclic group of order {group} has an element of order {n}");
    }
}

/// Square of a GF(2) polynomial: spread the bits.
fn poly_square(p: u64) -> u128 {
    let mut out: u128 = 0;
    let mut x = p;
    while x != 0 {
        let i = x.trailing_zeros();
        out |= 1u128 << (2 * i);
        x &= x - 1;
    }
    out
}

fn poly_rem64(a: u128, b: u64) -> u64 {
    poly_rem(a, b as u128) as u64
}

/// `x^(2^e) mod f` by repeated squaring.
fn frobenius_power(e: u32, f: u64) -> u64 {
    let mut x = poly_rem64(0b10, f);
    for _ in 0..e {
        x = poly_rem64(poly_square(x), f);
    }
    x
}

fn poly_gcd64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = poly_rem64(a as u128, b);
        a = b;
        b = r;
    }
    a
}

/// Irreducibility over GF(2): `x^(2^m) = x (mod f)` and for every prime
/// `p | m`, `gcd(x^(2^(m/p)) - x, f) = 1`.
fn is_irreducible(f: u64, m: u32) -> bool {
    if frobenius_power(m, f) != poly_rem64(0b10, f) {
        return false;
    }
    for p in primes(m as usize) {
        let x_q = frobenius_power(m / p as u32, f);
        let diff = x_q ^ poly_rem64(0b10, f);
        if poly_gcd64(diff, f) != 1 {
            return false;
        }
    }
    true
}

fn order_of_two_mod(n: usize) -> u32 {
    let mut pow = 2 % n;
    let mut m = 1;
    while pow != 1 {
        pow = (pow * 2) % n;
        m += 1;
    }
    m
}

/// The irreducible factors of `x^n - 1` over GF(2) for odd `n`, one per
/// cyclotomic coset, sorted by degree then numerically. The factorization is
/// verified against `x^n - 1` before returning.
pub fn factor_xn_minus_one(n: usize) -> Result<Vec<BitVector>> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::EvenCyclicLength { n });
    }
    let m = order_of_two_mod(n);
    let field = Gf2m::new(m);
    let alpha = field.element_of_order(n as u64);

    let mut factors: Vec<Poly> = Vec::new();
    for coset in cyclotomic_cosets(n) {
        // Minimal polynomial of alpha^s: product of (x - alpha^j) over the coset.
        let mut coeffs: Vec<u64> = vec![1];
        for &j in &coset {
            let root = field.pow(alpha, j as u64);
            let mut next = vec![0u64; coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] ^= c;
                next[i] ^= field.mul(c, root);
            }
            coeffs = next;
        }
        let mut poly: Poly = 0;
        for (i, &c) in coeffs.iter().enumerate() {
            debug_assert!(c <= 1, "minimal polynomial has coefficients in GF(2)");
            if c == 1 {
                poly |= 1 << i;
            }
        }
        factors.push(poly);
    }
    factors.sort_unstable_by_key(|&p| (poly_deg(p).unwrap_or(0), p));

    let product = factors.iter().fold(1u128, |acc, &f| {
        let mut out: Poly = 0;
        let mut x = acc;
        let mut y = f;
        while y != 0 {
            if y & 1 == 1 {
                out ^= x;
            }
            x <<= 1;
            y >>= 1;
        }
        out
    });
    let target: Poly = (1 << n) | 1;
    assert_eq!(product, target, "factor product must equal x^n - 1");

    Ok(factors.into_iter().map(poly_to_bits).collect())
}

/// All monic divisors of `x^n - 1` over GF(2) for odd `n`, built as subset
/// products of the irreducible factors; deduplicated and sorted by degree.
pub fn cyclic_divisors(n: usize) -> Result<Vec<BitVector>> {
    let factors: Vec<Poly> = factor_xn_minus_one(n)?
        .iter()
        .map(poly_from_bits)
        .collect();
    let mut divisors: Vec<Poly> = vec![1];
    for &f in &factors {
        let with_f: Vec<Poly> = divisors
            .iter()
            .map(|&d| {
                let mut out: Poly = 0;
                let mut x = d;
                let mut y = f;
                while y != 0 {
                    if y & 1 == 1 {
                        out ^= x;
                    }
                    x <<= 1;
                    y >>= 1;
                }
                out
            })
            .collect();
        divisors.extend(with_f);
    }
    divisors.sort_unstable_by_key(|&p| (poly_deg(p).unwrap_or(0), p));
    divisors.dedup();
    Ok(divisors.into_iter().map(poly_to_bits).collect())
}

/// The cyclic code of odd length `n` generated by `g`, which must divide
/// `x^n - 1`; the dimension is `n - deg(g)`.
pub fn cyclic_code(n: usize, g: &BitVector) -> Result<LinearCode> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::EvenCyclicLength { n });
    }
    if n >= 128 {
        return Err(Error::SizeGuard {
            what: "cyclic length",
            got: n,
            limit: 127,
        });
    }
    let g = poly_from_bits(g);
    let deg = match poly_deg(g) {
        Some(d) if (d as usize) <= n => d as usize,
        _ => return Err(Error::InvalidGenerator { n }),
    };
    let target: Poly = (1 << n) | 1;
    if poly_rem(target, g) != 0 {
        return Err(Error::InvalidGenerator { n });
    }
    let k = n - deg;
    if k == 0 {
        return Ok(LinearCode::zero(n));
    }
    let mut rows = Vec::with_capacity(k);
    for shift in 0..k {
        let p = g << shift;
        let mut row = BitVector::zeros(n);
        for i in 0..n {
            if (p >> i) & 1 == 1 {
                row.set(i, true);
            }
        }
        rows.push(row);
    }
    LinearCode::from_rows(BitMatrix::from_rows(rows)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> BitVector {
        BitVector::from_str01(s).unwrap()
    }

    #[test]
    fn coset_structure() {
        let cosets = cyclotomic_cosets(7);
        assert_eq!(cosets, vec![vec![0], vec![1, 2, 4], vec![3, 5, 6]]);
        let sizes: Vec<usize> = cyclotomic_cosets(9).iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 2, 6]);
    }

    #[test]
    fn divisor_counts() {
        assert_eq!(cyclic_divisors(7).unwrap().len(), 8);
        assert_eq!(cyclic_divisors(3).unwrap().len(), 4);
        assert_eq!(cyclic_divisors(9).unwrap().len(), 8);
        assert!(cyclic_divisors(8).is_err());
    }

    #[test]
    fn factors_of_seven() {
        let fs = factor_xn_minus_one(7).unwrap();
        assert_eq!(fs.len(), 3);
        assert_eq!(fs[0], bits("11")); // x + 1
        // The two cubics x^3 + x + 1 and x^3 + x^2 + 1 in some order.
        let degs: Vec<usize> = fs.iter().map(|f| f.len() - 1).collect();
        assert_eq!(degs, vec![1, 3, 3]);
    }

    #[test]
    fn hamming_code_from_generator() {
        // g = x^3 + x + 1 generates the [7,4] Hamming code.
        let c = cyclic_code(7, &bits("1101")).unwrap();
        assert_eq!((c.len(), c.dim()), (7, 4));
        let words = c.codewords();
        let min = words
            .iter()
            .filter(|w| !w.is_zero())
            .map(|w| w.weight())
            .min();
        assert_eq!(min, Some(3));
    }

    #[test]
    fn parity_check_code_from_x_plus_one() {
        let c = cyclic_code(9, &bits("11")).unwrap();
        assert_eq!((c.len(), c.dim()), (9, 8));
        assert!(c.classify().is_even);
    }

    #[test]
    fn rejects_non_divisor() {
        // x^2 + 1 = (x+1)^2 does not divide the squarefree x^7 - 1.
        assert!(cyclic_code(7, &bits("101")).is_err());
    }

    #[test]
    fn shift_invariance() {
        let c = cyclic_code(7, &bits("1101")).unwrap();
        for w in c.codewords() {
            let mut shifted = BitVector::zeros(7);
            for i in 0..7 {
                if w.get(i) {
                    shifted.set((i + 1) % 7, true);
                }
            }
            assert!(c.contains(&shifted));
        }
    }

    #[test]
    fn full_ring_generator_gives_zero_code() {
        // g = x^3 - 1 itself.
        let c = cyclic_code(3, &bits("1001")).unwrap();
        assert_eq!((c.len(), c.dim()), (3, 0));
    }
}
