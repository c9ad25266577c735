//! Seeded random elements for property sweeps.
//!
//! Each trial draws from its own ChaCha stream selected by
//! `(seed, domain, trial)`, so results do not depend on evaluation order or on
//! how trials are spread over threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::basis::BasisSymbol;
use crate::element::Element;
use crate::rational;

/// Independent random streams for the different sweeps sharing one seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u32)]
pub enum Domain {
    Associativity = 1,
    Derivation = 2,
    Novikov = 3,
    Isomorphism = 4,
    IsomorphismNumeric = 5,
}

pub fn trial_rng(seed: u64, domain: Domain, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((domain as u64) << 40) ^ trial);
    rng
}

/// 1 to 4 terms, each a basis vector drawn uniformly among those with index
/// `<= max_index` and a coefficient drawn uniformly from `{-3..3} \ {0}`.
/// The symbols are distinct, so the result is never zero.
pub fn random_element<R: Rng + ?Sized>(rng: &mut R, max_index: u64) -> Element {
    let symbols = 2 * max_index + 1;
    let count = rng.random_range(1..=4u64).min(symbols);
    let mut chosen: Vec<u64> = Vec::with_capacity(count as usize);
    while (chosen.len() as u64) < count {
        let k = rng.random_range(0..symbols);
        if !chosen.contains(&k) {
            chosen.push(k);
        }
    }
    Element::from_terms(chosen.into_iter().map(|k| {
        let coeff = loop {
            let c: i64 = rng.random_range(-3..=3);
            if c != 0 {
                break c;
            }
        };
        (rational::from_i64(coeff), nth_symbol(k))
    }))
}

/// The `k`-th basis vector in canonical order.
fn nth_symbol(k: u64) -> BasisSymbol {
    if k == 0 {
        BasisSymbol::b(0)
    } else if k % 2 == 1 {
        BasisSymbol::b(k.div_ceil(2))
    } else {
        BasisSymbol::a(k / 2)
    }
}
