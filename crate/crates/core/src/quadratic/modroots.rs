//! Roots of quadratics modulo a prime.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

/// Primes up to this bound are handled by exhausting residues.
pub const EXHAUSTIVE_PRIME_LIMIT: u64 = 1 << 12;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Legendre symbol (a/p) for an odd prime p: 0, 1 or −1.
pub fn legendre(a: &BigInt, p: u64) -> i8 {
    let r = a.mod_floor(&BigInt::from(p)).to_u64().unwrap();
    if r == 0 {
        return 0;
    }
    if pow_mod(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Tonelli–Shanks square root of a quadratic residue `n` modulo an odd prime.
pub fn sqrt_mod_prime(n: u64, p: u64) -> Option<u64> {
    let n = n % p;
    if n == 0 {
        return Some(0);
    }
    if pow_mod(n, (p - 1) / 2, p) != 1 {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(n, q, p);
    let mut r = pow_mod(n, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

fn reduce(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

/// All residues r in [0, p) with A·r² + B·r + C ≡ 0 (mod p), ascending.
pub fn roots_mod_prime(coeffs: [&BigInt; 3], p: u64) -> Vec<u64> {
    let [a, b, c] = coeffs.map(|x| reduce(x, p));
    if p <= EXHAUSTIVE_PRIME_LIMIT {
        return (0..p)
            .filter(|&r| (mul_mod(mul_mod(a, r, p), r, p) + mul_mod(b, r, p) + c) % p == 0)
            .collect();
    }
    // p odd from here on
    if a == 0 {
        if b == 0 {
            return if c == 0 { (0..p).collect() } else { Vec::new() };
        }
        return vec![mul_mod(p - c % p, inv_mod(b, p), p) % p];
    }
    let disc = (mul_mod(b, b, p) + p - mul_mod(4 % p, mul_mod(a, c, p), p)) % p;
    let Some(s) = sqrt_mod_prime(disc, p) else {
        return Vec::new();
    };
    let inv2a = inv_mod(mul_mod(2, a, p), p);
    let r1 = mul_mod((p - b + s) % p, inv2a, p);
    let r2 = mul_mod((2 * p - b - s) % p, inv2a, p);
    let mut out = vec![r1, r2];
    out.sort_unstable();
    out.dedup();
    out
}
