//! Every explicit characteristic matrix, stored exactly as printed, plus
//! independently recomputed variants where the printed one is suspect.

use cremona_arith::{BigInt, IntegerMatrix};
use serde::{Deserialize, Serialize};

use crate::{LatticeIsometry, PicardError, Verification};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Entries transcribed verbatim.
    Printed,
    /// Recomputed from the blow-up bookkeeping of the map.
    Recomputed,
    /// Built from a printed block pattern.
    Pattern,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub source_ref: &'static str,
    pub provenance: Provenance,
    pub isometry: LatticeIsometry,
}

impl CatalogEntry {
    pub fn matrix(&self) -> &IntegerMatrix {
        &self.isometry.matrix
    }

    pub fn verified(&self) -> Verification {
        self.isometry.verified
    }

    /// A verbatim matrix that fails the checks it should pass.
    pub fn is_discrepancy(&self) -> bool {
        self.provenance == Provenance::Printed && self.verified() == Verification::FailsIsometry
    }

    pub fn record(&self) -> CatalogRecord {
        let m = self.matrix();
        CatalogRecord {
            name: self.name.to_string(),
            size: m.n_rows(),
            entries: m.entries().iter().map(|v| v.to_string()).collect(),
            source_ref: self.source_ref.to_string(),
            provenance: self.provenance,
            verified: self.verified(),
        }
    }
}

/// Serialised form: `{name, size, entries, source_ref, provenance, verified}`
/// with `entries` the row-major integers as decimal strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub name: String,
    pub size: usize,
    pub entries: Vec<String>,
    pub source_ref: String,
    pub provenance: Provenance,
    pub verified: Verification,
}

impl CatalogRecord {
    pub fn matrix(&self) -> Result<IntegerMatrix, PicardError> {
        let v = self
            .entries
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|e| PicardError::Malformed(e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntegerMatrix::new(self.size, self.size, v)?)
    }
}

const M_SIGMA: [[i64; 4]; 4] = [
    [2, 1, 1, 1],
    [-1, 0, -1, -1],
    [-1, -1, 0, -1],
    [-1, -1, -1, 0],
];

const M_RHO: [[i64; 4]; 4] = [
    [1, 1, 0, 1],
    [-1, 0, 0, -1],
    [-1, -1, 1, -1],
    [-2, -2, 0, -1],
];

const M_TAU: [[i64; 4]; 4] = [[1, 0, 0, 1], [-1, 1, 0, -1], [-2, 0, 1, -2], [-3, 0, 0, -2]];

const M_FAB_Y: [[i64; 3]; 3] = [[2, 1, 1], [-1, -1, -1], [-1, 0, -1]];

/// Nonzero entries of the 16×16 and 13×13 matrices; the rest is zero.
/// Shape: column `pivot` carries `col`, plus a list of single 1s.
struct Sparse {
    size: usize,
    pivot: usize,
    col: &'static [i64],
    ones: &'static [(usize, usize)],
}

impl Sparse {
    fn build(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::zero(self.size, self.size);
        for (r, &v) in self.col.iter().enumerate() {
            m.set(r, self.pivot, v.into());
        }
        for &(r, c) in self.ones {
            m.set(r, c, 1.into());
        }
        m
    }
}

const BK3_16: Sparse = Sparse {
    size: 16,
    pivot: 5,
    col: &[1, 1, 2, 3, 3, 3, -1, -3, -3, -2, -3, 0, 0, 0, 0, 0],
    ones: &[
        (1, 11),
        (2, 12),
        (3, 13),
        (4, 14),
        (5, 15),
        (6, 1),
        (7, 4),
        (8, 3),
        (9, 2),
        (10, 0),
        (11, 6),
        (12, 7),
        (13, 8),
        (14, 9),
        (15, 10),
    ],
};

const PHI_PHI_16: Sparse = Sparse {
    size: 16,
    pivot: 5,
    col: &[1, 1, 2, 3, 3, 3, -1, -2, -3, -3, -3, 0, 0, 0, 0, 0],
    ones: BK3_16.ones,
};

const ROT_13: Sparse = Sparse {
    size: 13,
    pivot: 3,
    col: &[1, 1, 2, 2, -1, -2, -2, 0, 0, 0, 0, 0, 0],
    ones: &[
        (1, 10),
        (2, 11),
        (3, 12),
        (4, 1),
        (5, 2),
        (6, 0),
        (7, 4),
        (8, 5),
        (9, 6),
        (10, 7),
        (11, 8),
        (12, 9),
    ],
};

fn dense<const N: usize>(rows: &[[i64; N]; N]) -> IntegerMatrix {
    IntegerMatrix::from_rows(rows).expect("square literal")
}

/// Characteristic matrix of f_{a,b} on the blow-up of the n + 3 points
/// p_1, p_2, q, f(q), …, fⁿ(q): basis {H, E_1, E_2, Q, f(Q), …, fⁿ(Q)},
/// size n + 4.
pub fn bedford_kim_matrix(n: usize) -> LatticeIsometry {
    assert!(n >= 1, "bedford_kim_matrix needs n ≥ 1");
    let s = n + 4;
    let mut m = IntegerMatrix::zero(s, s);
    let mut put = |r: usize, c: usize, v: i64| m.set(r, c, v.into());
    for (c, v) in [2, 1, 1].into_iter().enumerate() {
        put(0, c, v);
    }
    put(0, s - 1, 1);
    for (c, v) in [-1, -1, -1].into_iter().enumerate() {
        put(1, c, v);
    }
    put(2, 0, -1);
    put(2, 2, -1);
    put(2, s - 1, -1);
    put(3, 0, -1);
    put(3, 1, -1);
    put(3, s - 1, -1);
    for r in 4..s {
        put(r, r - 1, 1);
    }
    LatticeIsometry::checked(m)
}

/// The full catalog, in a fixed order.
pub fn catalog() -> Vec<CatalogEntry> {
    use Provenance::*;
    let e = |name, source_ref, provenance, isometry| CatalogEntry {
        name,
        source_ref,
        provenance,
        isometry,
    };
    vec![
        e(
            "M_sigma",
            "standard quadratic involution (yz:xz:xy), basis {H,E,F,G}",
            Printed,
            LatticeIsometry::checked(dense(&M_SIGMA)),
        ),
        e(
            "M_rho",
            "involution (xy:z^2:yz), basis {H,E,F,G}, as printed",
            Printed,
            LatticeIsometry::checked(dense(&M_RHO)),
        ),
        e(
            "M_rho_recomputed",
            "involution (xy:z^2:yz), total transforms of the infinitely near base points",
            Recomputed,
            LatticeIsometry::checked(dense(&M_SIGMA)),
        ),
        e(
            "M_tau",
            "involution (x^2:xy:y^2-xz), basis {H,E,F,G}, as printed",
            Printed,
            LatticeIsometry::checked(dense(&M_TAU)),
        ),
        e(
            "M_tau_recomputed",
            "involution (x^2:xy:y^2-xz), total transforms of the infinitely near base points",
            Recomputed,
            LatticeIsometry::checked(dense(&M_SIGMA)),
        ),
        e(
            "M_fab_Y",
            "f_{a,b} lifted to the blow-up of p_1, p_2 (not an automorphism), basis {H,E_1,E_2}",
            Printed,
            LatticeIsometry::unchecked(dense(&M_FAB_Y)),
        ),
        e(
            "M_fab_7",
            "f_{a,b} on the blow-up of p_1, p_2, q, ..., f^7(q), block pattern with n = 7",
            Pattern,
            bedford_kim_matrix(7),
        ),
        e(
            "bk3_16",
            "k = 2 continuous family, 15 blown-up points, basis {Delta'', E, G, K, M, Lambda, ...}",
            Printed,
            LatticeIsometry::unchecked(BK3_16.build()),
        ),
        e(
            "phi_Phi_16",
            "phi_alpha composed with Phi, 15 blown-up points, basis {Delta, E, F, G, H, L, ...}",
            Printed,
            LatticeIsometry::unchecked(PHI_PHI_16.build()),
        ),
        e(
            "rot_13",
            "rotation-domain example n = 4, 12 blown-up points, basis {Delta', E, G, K, ...}",
            Printed,
            LatticeIsometry::unchecked(ROT_13.build()),
        ),
    ]
}

pub fn lookup(name: &str) -> Result<CatalogEntry, PicardError> {
    catalog()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| PicardError::UnknownEntry(name.to_string()))
}

/// The catalog as a JSON array of [`CatalogRecord`]s.
pub fn catalog_json() -> String {
    let recs: Vec<CatalogRecord> = catalog().iter().map(CatalogEntry::record).collect();
    serde_json::to_string_pretty(&recs).expect("records serialise")
}
