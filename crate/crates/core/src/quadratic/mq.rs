//! m_q(p): the largest k for which q(n) ≡ 0 (mod p^k) is solvable.
//!
//! The search walks the p-adic digit tree of the primitive part q₀. A node
//! stands for the residue class n ≡ n₀ (mod p^j) together with the shifted
//! polynomial g(y) = q₀(n₀ + p^j·y) / p^s, where p^s is the exact p-part of
//! the coefficients, so q₀ has valuation ≥ s on the class and g is primitive.
//!
//! * If g has no root mod p, q₀ has valuation exactly s on the whole class.
//! * If g has a simple root mod p, Hensel lifting produces a p-adic root.
//! * Otherwise each (double) root a spawns the child class n₀ + p^j·a.
//!
//! Each descent into a double root lowers v_p(disc g) by at least two, so
//! the walk is finite whenever the discriminant is nonzero. A vanishing
//! discriminant is settled directly from the rational double root.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::modroots::roots_mod_prime;
use super::poly::QuadraticPoly;
use crate::arith::{valuation, valuation_u64};
use crate::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MqValue {
    Finite(u32),
    Infinite,
}

impl MqValue {
    pub fn is_infinite(&self) -> bool {
        matches!(self, MqValue::Infinite)
    }

    pub fn finite(&self) -> Option<u32> {
        match self {
            MqValue::Finite(k) => Some(*k),
            MqValue::Infinite => None,
        }
    }
}

/// Evidence behind an [`MqResult`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MqWitness {
    /// m_q(p) = 0: q has no root mod p.
    NoRoot,
    /// A root of q mod p^level; no class survives to p^(level+1).
    Root {
        #[serde(with = "json::big")]
        n: BigUint,
        level: u32,
    },
    /// n satisfies v_p(q₀(n)) ≥ 2·v_p(q₀′(n)) + 1 for the primitive part q₀,
    /// so Hensel's lemma lifts it to a p-adic root. `value_valuation` is
    /// absent when q₀(n) = 0 exactly.
    Hensel {
        #[serde(with = "json::big")]
        n: BigUint,
        value_valuation: Option<u32>,
        derivative_valuation: u32,
    },
    /// Zero discriminant: the double root −b/(2a) is a p-adic integer.
    DoubleRoot { numerator: i64, denominator: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MqResult {
    pub p: u64,
    pub value: MqValue,
    /// v_p of the content; already included in `value`.
    pub content_valuation: u32,
    pub witness: MqWitness,
}

struct Node {
    g: [BigInt; 3],
    n0: BigInt,
    j: u32,
    s: u32,
}

fn coeff_valuation(g: &[BigInt; 3], p: u64) -> u32 {
    g.iter()
        .filter(|x| !x.is_zero())
        .map(|x| valuation(x, p))
        .min()
        .expect("quadratic with all-zero coefficients")
}

fn eval(g: &[BigInt; 3], y: &BigInt) -> BigInt {
    (&g[0] * y + &g[1]) * y + &g[2]
}

fn deriv(g: &[BigInt; 3], y: &BigInt) -> BigInt {
    BigInt::from(2) * &g[0] * y + &g[1]
}

/// g(a + p·y) / p^v, with v the exact p-part of the shifted coefficients.
fn descend(g: &[BigInt; 3], a: &BigInt, p: u64) -> ([BigInt; 3], u32) {
    let pb = BigInt::from(p);
    let shifted = [
        &g[0] * &pb * &pb,
        deriv(g, a) * &pb,
        eval(g, a),
    ];
    let v = coeff_valuation(&shifted, p);
    let pv = pb.pow(v);
    (shifted.map(|x| x / &pv), v)
}

/// Lifts a simple root a of g mod p to a root mod p^m.
fn hensel_lift(g: &[BigInt; 3], a: u64, p: u64, m: u32) -> BigInt {
    let pb = BigInt::from(p);
    let mut root = BigInt::from(a);
    let d_inv = deriv(g, &root)
        .mod_floor(&pb)
        .modpow(&(&pb - 2u32), &pb);
    let mut pk = pb.clone();
    for _ in 1..m {
        let val = eval(g, &root);
        debug_assert!((&val % &pk).is_zero());
        let t = (-(val / &pk) * &d_inv).mod_floor(&pb);
        root += t * &pk;
        pk *= &pb;
    }
    root
}

fn opt_valuation(x: &BigInt, p: u64) -> Option<u32> {
    (!x.is_zero()).then(|| valuation(x, p))
}

/// m_q(p) for a prime p.
pub fn mq(q: &QuadraticPoly, p: u64) -> MqResult {
    assert!(p >= 2, "mq needs a prime");
    let content_valuation = valuation_u64(q.content(), p);
    let q0 = q.primitive_part();
    let (a, b) = (q0.a, q0.b);

    if q0.discriminant().is_zero() {
        // q₀ = a·(n + b/2a)²; the root is p-adically integral iff v(2a) ≤ v(b).
        let integral = b == 0 || valuation_u64(2 * a as u64, p) <= valuation_u64(b.unsigned_abs(), p);
        if integral {
            let g = (2 * a).gcd(&b);
            return MqResult {
                p,
                value: MqValue::Infinite,
                content_valuation,
                witness: MqWitness::DoubleRoot {
                    numerator: -b / g,
                    denominator: 2 * a / g,
                },
            };
        }
    }

    let mut stack = vec![Node {
        g: q0.coefficients().map(BigInt::from),
        n0: BigInt::zero(),
        j: 0,
        s: 0,
    }];
    let pb = BigInt::from(p);
    // deepest dead class: (s, n0)
    let mut best: Option<(u32, BigInt)> = None;
    while let Some(node) = stack.pop() {
        let roots = roots_mod_prime([&node.g[0], &node.g[1], &node.g[2]], p);
        if roots.is_empty() {
            if best.as_ref().map_or(true, |(s, _)| node.s > *s) {
                best = Some((node.s, node.n0));
            }
            continue;
        }
        let pj = pb.pow(node.j);
        let simple = roots
            .iter()
            .find(|&&r| !deriv(&node.g, &BigInt::from(r)).mod_floor(&pb).is_zero());
        if let Some(&r) = simple {
            let m = (node.s + 1).saturating_sub(2 * node.j).max(1);
            let y = hensel_lift(&node.g, r, p, m);
            let n = (&node.n0 + &pj * y).mod_floor(&(&pj * pb.pow(m)));
            let nb = n.clone();
            let value_valuation = opt_valuation(&q0.eval(&nb), p);
            let derivative_valuation = valuation(&q0.derivative(&nb), p);
            return MqResult {
                p,
                value: MqValue::Infinite,
                content_valuation,
                witness: MqWitness::Hensel {
                    n: n.to_biguint().unwrap(),
                    value_valuation,
                    derivative_valuation,
                },
            };
        }
        for r in roots {
            let rb = BigInt::from(r);
            let (g, v) = descend(&node.g, &rb, p);
            stack.push(Node {
                g,
                n0: &node.n0 + &pj * rb,
                j: node.j + 1,
                s: node.s + v,
            });
        }
    }

    let (s, n0) = best.expect("digit tree has at least one leaf");
    let level = s + content_valuation;
    let witness = if level == 0 {
        MqWitness::NoRoot
    } else {
        let modulus = pb.pow(level);
        MqWitness::Root {
            n: n0.mod_floor(&modulus).to_biguint().unwrap(),
            level,
        }
    };
    MqResult {
        p,
        value: MqValue::Finite(level),
        content_valuation,
        witness,
    }
}

impl MqResult {
    /// Re-checks the witness against q without trusting the search.
    pub fn check(&self, q: &QuadraticPoly) -> bool {
        let p = self.p;
        let pb = BigInt::from(p);
        let q0 = q.primitive_part();
        match (&self.value, &self.witness) {
            (MqValue::Finite(0), MqWitness::NoRoot) => {
                p > 1 << 20 || (0..p).all(|n| !q.eval(&BigInt::from(n)).mod_floor(&pb).is_zero())
            }
            (MqValue::Finite(k), MqWitness::Root { n, level }) => {
                *k == *level
                    && q.eval(&BigInt::from(n.clone()))
                        .mod_floor(&pb.pow(*level))
                        .is_zero()
            }
            (
                MqValue::Infinite,
                MqWitness::Hensel {
                    n,
                    value_valuation,
                    derivative_valuation,
                },
            ) => {
                let n = BigInt::from(n.clone());
                let v = opt_valuation(&q0.eval(&n), p);
                let t = valuation(&q0.derivative(&n), p);
                v == *value_valuation
                    && t == *derivative_valuation
                    && v.map_or(true, |v| v > 2 * t)
            }
            (
                MqValue::Infinite,
                MqWitness::DoubleRoot {
                    numerator,
                    denominator,
                },
            ) => {
                // root = num/den with p ∤ den, and q₀(num/den) = 0
                let (num, den) = (BigInt::from(*numerator), BigInt::from(*denominator));
                !den.is_zero()
                    && !(&den % &pb).is_zero()
                    && ((BigInt::from(q0.a) * &num + BigInt::from(q0.b) * &den) * &num
                        + BigInt::from(q0.c) * &den * &den)
                        .is_zero()
            }
            _ => false,
        }
    }
}
