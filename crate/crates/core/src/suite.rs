//! Self-checks shared by the `selftest` command: the defining relations and
//! the multiplication table as canonical-form identities, and random
//! products checked against the action on polynomials.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::operator::{make_eij, normalize_word, CanonicalOperator, Generator, Word};
use crate::oracle::verify_product;
use crate::rational::int;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

fn op(letters: &[Generator]) -> CanonicalOperator {
    normalize_word(&Word::product(letters.to_vec()))
}

/// Defining relations plus every product rule with indices up to `max_index`.
pub fn relation_suite(max_index: usize) -> SuiteReport {
    use Generator::*;
    let mut r = SuiteReport { checks: 0, failures: Vec::new() };
    let one = CanonicalOperator::one();
    let (d, i, h) = (op(&[Del]), op(&[Int]), op(&[H]));
    let comm = |a: &CanonicalOperator, b: &CanonicalOperator| &(a * b) - &(b * a);
    let e00 = &one - &(&i * &d);

    r.check(&d * &i == one, || "∂∫ = 1".into());
    r.check(comm(&h, &i) == i, || "[H, ∫] = ∫".into());
    r.check(comm(&h, &d) == -&d, || "[H, ∂] = -∂".into());
    r.check(&h * &e00 == e00, || "H(1 - ∫∂) = 1 - ∫∂".into());
    r.check(&e00 * &h == e00, || "(1 - ∫∂)H = 1 - ∫∂".into());
    r.check(op(&[X]) == &i * &h, || "x = ∫H".into());
    r.check(&i * &h == &(&h - &one) * &i, || "∫H = (H - 1)∫".into());
    r.check(&h * &d == &d * &(&h - &one), || "H∂ = ∂(H - 1)".into());

    for a in 0..=max_index {
        for b in 0..=max_index {
            let e = make_eij(a, b);
            let def = &(&i.pow(a) * &d.pow(b)) - &(&i.pow(a + 1) * &d.pow(b + 1));
            r.check(e == def, || format!("e({a},{b}) = ∫^{a}∂^{b} - ∫^{}∂^{}", a + 1, b + 1));
            r.check(&i * &e == make_eij(a + 1, b), || format!("∫e({a},{b})"));
            let below = if b == 0 { CanonicalOperator::zero() } else { make_eij(a, b - 1) };
            r.check(&e * &i == below, || format!("e({a},{b})∫"));
            let left = if a == 0 { CanonicalOperator::zero() } else { make_eij(a - 1, b) };
            r.check(&d * &e == left, || format!("∂e({a},{b})"));
            r.check(&e * &d == make_eij(a, b + 1), || format!("e({a},{b})∂ = e({a},{})", b + 1));
            let f = &h.pow(2) - &h;
            let fv = |s: usize| int((s as i64 + 1) * (s as i64 + 1) - (s as i64 + 1));
            r.check(&f * &e == e.scale(&fv(a)), || format!("f(H)e({a},{b})"));
            r.check(&e * &f == e.scale(&fv(b)), || format!("e({a},{b})f(H)"));
            if a == b {
                r.check(&h * &e == e.scale(&int(a as i64 + 1)), || format!("He({a},{a})"));
                r.check(&e * &h == e.scale(&int(a as i64 + 1)), || format!("e({a},{a})H"));
            }
            for k in 0..=max_index {
                for l in 0..=max_index {
                    let expect = if b == k { make_eij(a, l) } else { CanonicalOperator::zero() };
                    r.check(&e * &make_eij(k, l) == expect, || format!("e({a},{b})e({k},{l})"));
                }
            }
        }
    }
    r
}

/// Bounds for random operators.
#[derive(Clone, Copy, Debug)]
pub struct WordShape {
    pub max_terms: usize,
    pub max_len: usize,
    pub max_coeff: i64,
    pub max_e_index: usize,
}

impl Default for WordShape {
    fn default() -> Self {
        WordShape {
            max_terms: 2,
            max_len: 10,
            max_coeff: 3,
            max_e_index: 5,
        }
    }
}

pub fn random_word(rng: &mut impl Rng, shape: WordShape) -> Word {
    let terms = rng.gen_range(1..=shape.max_terms);
    Word::new(
        (0..terms)
            .map(|_| {
                let c = int(rng.gen_range(-shape.max_coeff..=shape.max_coeff));
                let len = rng.gen_range(0..=shape.max_len);
                let letters = (0..len)
                    .map(|_| match rng.gen_range(0..5) {
                        0 => Generator::X,
                        1 => Generator::Del,
                        2 => Generator::Int,
                        3 => Generator::H,
                        _ => Generator::E(
                            rng.gen_range(0..=shape.max_e_index),
                            rng.gen_range(0..=shape.max_e_index),
                        ),
                    })
                    .collect();
                (c, letters)
            })
            .collect(),
    )
}

/// Checks `pairs` random products against the truncated action.
pub fn oracle_suite(pairs: usize, seed: u64, size: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = SuiteReport { checks: 0, failures: Vec::new() };
    for k in 0..pairs {
        let a = normalize_word(&random_word(&mut rng, WordShape::default()));
        let b = normalize_word(&random_word(&mut rng, WordShape::default()));
        let outcome = verify_product(&a, &b, size);
        r.check(outcome.is_ok(), || format!("pair {k}: ({a}) * ({b}): {}", outcome.unwrap_err()));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold_for_small_indices() {
        let r = relation_suite(3);
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.checks > 100);
    }

    #[test]
    fn oracle_smoke() {
        let r = oracle_suite(20, 1, 30);
        assert!(r.passed(), "{:?}", r.failures);
    }
}
