//! The sign-convention ledger.
//!
//! The formulas this crate implements are riddled with Koszul signs, and a
//! handful of conventions have to be fixed once and for all (composition
//! order of permutations, the differential of a shifted complex, the
//! suspension and décalage signs, ...). Each such choice is a named entry
//! here. The entry documents the convention; the verification suites pin it:
//! flipping any entry via [`set_mutation`] (exposed as `--mutate-sign` on the
//! CLI) makes at least one suite fail.
//!
//! A mutation is not a blanket `* -1` — that would cancel in any identity
//! that is bilinear in the affected operation. Instead each site declares a
//! context-dependent parity (the exponent that distinguishes the chosen
//! convention from its natural rival), and the mutation turns that parity on.
//!
//! | id | convention pinned |
//! |----|-------------------|
//! | `koszul-sign` | inversion pairs of graded elements contribute `(-1)^(d_a d_b)`, not `(-1)^(d_a d_b + 1)` |
//! | `compose-prefix` | `(f o_i g)` carries `(-1)^(\|g\|(\|v_1\|+...+\|v_{i-1}\|))`, degrees only — slots are not counted |
//! | `shift-differential` | the differential of `V[k]` is `(-1)^k d`, so double shifts compose strictly |
//! | `suspension-decalage` | suspension weights input `a` of an arity-`p` map by `p - a`, over degrees in the shifted complex |
//! | `bracket-antisymmetry` | `[f,g] = f*g - (-1)^(\|f\|\|g\|) g*f`, with the Koszul factor |
//! | `multiderivation-mu` | both product terms of the multi-derivation identity carry `(-1)^(\|mu\|\|f\|)` |
//! | `decalage-product` | the induced product on the shifted convolution algebra is `(-1)^((n+1)(\|f\|+n+1))` times the shuffle product |
//! | `realize-pairing` | the duality pairing realizing polyvectors is oriented so the classical bivector gives bracket `+1` |
//! | `bracket-extraction` | un-décalage of the binary bracket keeps the orientation of the pairing |
//! | `tensor-leibniz` | a differential passes a left tensor factor with `(-1)^(\|left\|)` (polyvector words and forms-coefficients alike) |

use std::sync::atomic::{AtomicU8, Ordering};

/// Identifier of one pinned sign convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignId {
    KoszulSign,
    ComposePrefix,
    ShiftDifferential,
    SuspensionDecalage,
    BracketAntisymmetry,
    MultiderivationMu,
    DecalageProduct,
    RealizePairing,
    BracketExtraction,
    TensorLeibniz,
}

pub const ALL: [SignId; 10] = [
    SignId::KoszulSign,
    SignId::ComposePrefix,
    SignId::ShiftDifferential,
    SignId::SuspensionDecalage,
    SignId::BracketAntisymmetry,
    SignId::MultiderivationMu,
    SignId::DecalageProduct,
    SignId::RealizePairing,
    SignId::BracketExtraction,
    SignId::TensorLeibniz,
];

impl SignId {
    pub fn as_str(self) -> &'static str {
        match self {
            SignId::KoszulSign => "koszul-sign",
            SignId::ComposePrefix => "compose-prefix",
            SignId::ShiftDifferential => "shift-differential",
            SignId::SuspensionDecalage => "suspension-decalage",
            SignId::BracketAntisymmetry => "bracket-antisymmetry",
            SignId::MultiderivationMu => "multiderivation-mu",
            SignId::DecalageProduct => "decalage-product",
            SignId::RealizePairing => "realize-pairing",
            SignId::BracketExtraction => "bracket-extraction",
            SignId::TensorLeibniz => "tensor-leibniz",
        }
    }

    pub fn from_str(text: &str) -> Option<SignId> {
        ALL.into_iter().find(|id| id.as_str() == text)
    }

    pub fn describe(self) -> &'static str {
        match self {
            SignId::KoszulSign => "Koszul sign of a permutation of graded elements",
            SignId::ComposePrefix => "input-prefix sign of operadic partial composition",
            SignId::ShiftDifferential => "sign of the differential on a shifted complex",
            SignId::SuspensionDecalage => "per-input weights of the operadic suspension sign",
            SignId::BracketAntisymmetry => "Koszul factor in the commutator bracket",
            SignId::MultiderivationMu => "global factor of the multi-derivation identity",
            SignId::DecalageProduct => "décalage sign of the induced commutative product",
            SignId::RealizePairing => "orientation of the polyvector duality pairing",
            SignId::BracketExtraction => "orientation of the extracted binary bracket",
            SignId::TensorLeibniz => "left-factor pass sign of tensor differentials",
        }
    }

    fn code(self) -> u8 {
        ALL.iter().position(|id| *id == self).unwrap() as u8 + 1
    }
}

static MUTATED: AtomicU8 = AtomicU8::new(0);

/// Flips one ledger entry for the rest of the process. Intended to be called
/// once, at startup, before any computation; passing `None` restores the
/// canonical conventions (useful in sequential test harnesses).
pub fn set_mutation(id: Option<SignId>) {
    MUTATED.store(id.map_or(0, SignId::code), Ordering::SeqCst);
}

pub fn mutation() -> Option<SignId> {
    let code = MUTATED.load(Ordering::Relaxed);
    ALL.into_iter().find(|id| id.code() == code)
}

/// The corruption factor a use site multiplies into its canonical sign:
/// `(-1)^parity` when `id` is the mutated entry, `+1` otherwise.
pub fn twist(id: SignId, parity: i64) -> i64 {
    if mutation() == Some(id) && parity.rem_euclid(2) == 1 {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for id in ALL {
            assert_eq!(SignId::from_str(id.as_str()), Some(id));
        }
        assert_eq!(SignId::from_str("nope"), None);
    }

    #[test]
    fn twist_is_inactive_by_default() {
        for id in ALL {
            assert_eq!(twist(id, 1), 1);
            assert_eq!(twist(id, 7), 1);
        }
    }
}
