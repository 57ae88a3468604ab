//! Dense GF(2) linear algebra on bit-packed rows. Used for scalar and
//! subring-coefficient solves and for rank computations in the Tate
//! cohomology checks.

/// A matrix over GF(2); each row is packed into 64-bit limbs.
#[derive(Clone, Debug)]
pub struct BitMatrix {
    ncols: usize,
    rows: Vec<Vec<u64>>,
}

fn limbs_for(ncols: usize) -> usize {
    ncols.div_ceil(64)
}

impl BitMatrix {
    pub fn new(ncols: usize) -> Self {
        BitMatrix { ncols, rows: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn push_empty_row(&mut self) -> usize {
        self.rows.push(vec![0u64; limbs_for(self.ncols)]);
        self.rows.len() - 1
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        debug_assert!(col < self.ncols);
        let limb = &mut self.rows[row][col / 64];
        if value {
            *limb |= 1 << (col % 64);
        } else {
            *limb &= !(1 << (col % 64));
        }
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.rows[row][col / 64] >> (col % 64) & 1 == 1
    }

    pub fn flip(&mut self, row: usize, col: usize) {
        self.rows[row][col / 64] ^= 1 << (col % 64);
    }

    fn xor_rows(&mut self, target: usize, source: usize) {
        if target == source {
            return;
        }
        let (lo, hi) = (target.min(source), target.max(source));
        let (a, b) = self.rows.split_at_mut(hi);
        let (t, s) = if target < source { (&mut a[lo], &b[0]) } else { (&mut b[0], &a[lo]) };
        for (x, y) in t.iter_mut().zip(s.iter()) {
            *x ^= *y;
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce().len()
    }

    /// In-place row echelon form; returns the pivot column of each
    /// surviving (nonzero) row, in order.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.ncols {
            let mut pivot = None;
            for r in row..self.rows.len() {
                if self.get(r, col) {
                    pivot = Some(r);
                    break;
                }
            }
            let Some(p) = pivot else { continue };
            self.rows.swap(row, p);
            for r in 0..self.rows.len() {
                if r != row && self.get(r, col) {
                    self.xor_rows(r, row);
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows.len() {
                break;
            }
        }
        self.rows.truncate(row);
        pivots
    }
}

/// Solves `A x = b` over GF(2) where `A` is given by columns. Returns one
/// solution (free variables set to zero), or `None` if inconsistent.
pub fn solve_columns(ncols_rows: usize, columns: &[Vec<u64>], rhs: &[u64]) -> Option<Vec<bool>> {
    // Build augmented rows from the column representation.
    let ncols = columns.len() + 1;
    let mut m = BitMatrix::new(ncols);
    for r in 0..ncols_rows {
        let row = m.push_empty_row();
        for (c, col) in columns.iter().enumerate() {
            if col[r / 64] >> (r % 64) & 1 == 1 {
                m.set(row, c, true);
            }
        }
        if rhs[r / 64] >> (r % 64) & 1 == 1 {
            m.set(row, columns.len(), true);
        }
    }
    let pivots = m.row_reduce();
    let mut solution = vec![false; columns.len()];
    for (i, &p) in pivots.iter().enumerate() {
        if p == columns.len() {
            return None; // pivot in the augmented column: inconsistent
        }
        solution[p] = m.get(i, columns.len());
    }
    Some(solution)
}

/// Packs a set of row indices into limbs (helper for callers building columns).
pub fn pack_bits(nrows: usize, set_rows: impl IntoIterator<Item = usize>) -> Vec<u64> {
    let mut v = vec![0u64; limbs_for(nrows.max(1))];
    for r in set_rows {
        v[r / 64] |= 1 << (r % 64);
    }
    v
}
