use std::fmt;

/// The two families of basis vectors. The declaration order is the tie-break
/// of the canonical term order: at equal index `b` sorts before `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    B,
    A,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::A => "a",
            Kind::B => "b",
        }
    }
}

/// A basis vector `a_n` (`n >= 1`) or `b_m` (`m >= 0`).
///
/// Ordering is the canonical term order: ascending index, then `b` before `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisSymbol {
    index: u64,
    kind: Kind,
}

impl BasisSymbol {
    /// `a_n`. Panics for `n == 0`, which is not a basis vector; use
    /// [`crate::Element::canonical_a`] for signed or zero indices.
    pub fn a(n: u64) -> Self {
        assert!(n >= 1, "a_0 is not a basis vector");
        BasisSymbol { index: n, kind: Kind::A }
    }

    pub fn b(m: u64) -> Self {
        BasisSymbol { index: m, kind: Kind::B }
    }

    /// `None` for `a_0`.
    pub fn new(kind: Kind, index: u64) -> Option<Self> {
        match kind {
            Kind::A if index == 0 => None,
            _ => Some(BasisSymbol { index, kind }),
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    /// All basis vectors with index at most `max_index`, in canonical order:
    /// `b_0, b_1, a_1, b_2, a_2, ...`.
    pub fn up_to(max_index: u64) -> Vec<BasisSymbol> {
        let mut out = Vec::with_capacity(2 * max_index as usize + 1);
        out.push(BasisSymbol::b(0));
        for n in 1..=max_index {
            out.push(BasisSymbol::b(n));
            out.push(BasisSymbol::a(n));
        }
        out
    }
}

impl fmt::Display for BasisSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.kind.as_str(), self.index)
    }
}
