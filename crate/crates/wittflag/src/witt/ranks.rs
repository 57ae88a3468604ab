//! Graded ranks of Z4-graded exterior algebras over GF(2).
//!
//! For an exterior algebra on f generators of degree -1 and g generators
//! of degree -3, the dimension of the degree -k part is
//!
//!   u_{-k} = 2^{x-2} + 2^{(x-2)/2} * Re(zeta^{2k - f + g}),   x = f + g,
//!
//! with zeta a primitive eighth root of unity. The irrational factors
//! always combine to integers; we evaluate them exactly by a case split
//! on (2k - f + g) mod 8, which has the parity of x.

use serde::Serialize;

/// Dimensions of the four graded pieces, indexed so that `dims[k]` is the
/// rank in degree -k.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankVector {
    pub dims: [u64; 4],
}

impl RankVector {
    pub fn unit() -> Self {
        RankVector { dims: [1, 0, 0, 0] }
    }

    pub fn dim(&self, k: usize) -> u64 {
        self.dims[k]
    }

    pub fn total(&self) -> u64 {
        self.dims.iter().sum()
    }

    pub fn scaled(&self, a: u64) -> RankVector {
        let dims = self.dims.map(|d| {
            a.checked_mul(d).expect("rank fits in 64 bits")
        });
        RankVector { dims }
    }
}

impl std::fmt::Display for RankVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            self.dims[0], self.dims[1], self.dims[2], self.dims[3]
        )
    }
}

/// Exact ranks from the closed form. The zero algebra (f = g = 0) is the
/// unit vector; otherwise every entry is (2^x + 4*Re(i^k (1-i)^f (1+i)^g))/4,
/// evaluated without irrational arithmetic.
pub fn exterior_ranks(f: u64, g: u64) -> RankVector {
    if f == 0 && g == 0 {
        return RankVector::unit();
    }
    let x = f + g;
    assert!(x <= 100, "exterior algebra too large: {f} + {g} generators");
    let two_x: i128 = 1 << x;
    let mut dims = [0u64; 4];
    for (k, slot) in dims.iter_mut().enumerate() {
        let s = (2 * k as i64 - f as i64 + g as i64).rem_euclid(8) as u64;
        // s and x always have the same parity.
        assert_eq!(s % 2, x % 2);
        let spread: i128 = match s {
            0 => 1 << ((x + 2) / 2),
            4 => -(1 << ((x + 2) / 2)),
            2 | 6 => 0,
            1 | 7 => 1 << x.div_ceil(2),
            3 | 5 => -(1 << x.div_ceil(2)),
            _ => unreachable!(),
        };
        let quadrupled = two_x + spread;
        assert!(quadrupled >= 0 && quadrupled % 4 == 0, "entry is not integral");
        *slot = (quadrupled / 4) as u64;
    }
    RankVector { dims }
}

/// Independent oracle: expand (1 + t^-1)^f (1 + t^-3)^g term by term and
/// fold the exponents modulo 4. Guarded to f + g <= 24.
pub fn brute_exterior_ranks(f: u64, g: u64) -> RankVector {
    assert!(f + g <= 24, "brute-force expansion guard: {f} + {g} > 24");
    let mut dims = [0u64; 4];
    for i in 0..=f {
        for j in 0..=g {
            let ways = crate::binom::binom_exact(f, i) * crate::binom::binom_exact(g, j);
            dims[((i + 3 * j) % 4) as usize] += ways as u64;
        }
    }
    RankVector { dims }
}

/// The two printed rank tables for the classical families: entries are
/// 2^{r-2} + sign * c * (-4)^{(r-d)/4}, tabulated by r mod 4. `Twisted`
/// is the table used when one exterior generator sits in degree -3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankTable {
    Plain,
    Twisted,
}

/// One table entry: coefficient c (0 for a bare power of two), sign, and
/// the offset d in the exponent (r - d)/4.
type Entry = (i128, i128, u64);

const PLAIN_ROWS: [[Entry; 4]; 4] = [
    [(2, -1, 4), (0, 0, 0), (2, 1, 4), (0, 0, 0)],
    [(2, -1, 5), (2, -1, 5), (2, 1, 5), (2, 1, 5)],
    [(0, 0, 0), (1, 1, 2), (0, 0, 0), (1, -1, 2)],
    [(1, -1, 3), (1, 1, 3), (1, 1, 3), (1, -1, 3)],
];

const TWISTED_ROWS: [[Entry; 4]; 4] = [
    [(0, 0, 0), (2, 1, 4), (0, 0, 0), (2, -1, 4)],
    [(2, -1, 5), (2, 1, 5), (2, 1, 5), (2, -1, 5)],
    [(1, 1, 2), (0, 0, 0), (1, -1, 2), (0, 0, 0)],
    [(1, 1, 3), (1, 1, 3), (1, -1, 3), (1, -1, 3)],
];

/// (-4)^e as an exact integer.
fn neg4_pow(e: u64) -> i128 {
    let magnitude: i128 = 1 << (2 * e);
    if e % 2 == 1 { -magnitude } else { magnitude }
}

/// Evaluates 2^{r-2} + sign * c * (-4)^{(r-d)/4} at four times scale, so
/// that the half-integer entries at small r combine exactly.
fn entry_value(r: u64, (c, sign, d): Entry) -> u64 {
    assert!(r <= 60, "table evaluation guard");
    let quadrupled: i128 = if c == 0 {
        assert!(r >= 2, "bare power entry needs r >= 2");
        1 << r
    } else {
        // 4 * (-4)^{(r-d)/4} = -(-4)^{(r-d+4)/4}; rows are selected so the
        // exponent is a non-negative integer.
        assert!(r % 4 == d % 4 && r + 4 >= d);
        (1 << r) - sign * c * neg4_pow((r + 4 - d) / 4)
    };
    assert!(quadrupled >= 0 && quadrupled % 4 == 0, "entry is not integral");
    (quadrupled / 4) as u64
}

/// Ranks from the closed-form tables, including the degenerate r = 0 rule.
pub fn table_ranks(table: RankTable, r: u64) -> RankVector {
    if r == 0 {
        return RankVector::unit();
    }
    let rows = match table {
        RankTable::Plain => &PLAIN_ROWS,
        RankTable::Twisted => &TWISTED_ROWS,
    };
    let row = rows[(r % 4) as usize];
    RankVector { dims: row.map(|e| entry_value(r, e)) }
}
