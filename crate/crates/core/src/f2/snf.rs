use super::taupoly::{TauPoly, TauPolyMatrix};

/// Smith normal form data for a matrix A over GF(2)[t]:
/// `u * A * v = D` with `u`, `v` unimodular and D diagonal, each diagonal
/// entry dividing the next. `u_inv` and `v_inv` are the tracked inverses
/// (elementary additions are involutions in characteristic 2, so tracking
/// them is cheap).
pub struct SmithDecomposition {
    pub diagonal: Vec<TauPoly>,
    pub u: TauPolyMatrix,
    pub u_inv: TauPolyMatrix,
    pub v: TauPolyMatrix,
    pub v_inv: TauPolyMatrix,
    /// Number of nonzero diagonal entries = rank over GF(2)(t).
    pub rank: usize,
}

/// Invariant factors of `m` (the nonzero diagonal of a Smith normal form).
pub fn smith_normal_form(m: &TauPolyMatrix) -> Vec<TauPoly> {
    smith_normal_form_full(m).diagonal
}

pub fn smith_normal_form_full(m: &TauPolyMatrix) -> SmithDecomposition {
    let mut a = m.clone();
    let rows = a.rows();
    let cols = a.cols();
    let mut u = TauPolyMatrix::identity(rows);
    let mut u_inv = TauPolyMatrix::identity(rows);
    let mut v = TauPolyMatrix::identity(cols);
    let mut v_inv = TauPolyMatrix::identity(cols);

    // Elementary operations, mirrored onto the transform matrices.
    // Row op on A is multiplication on the left: also applied to u (left)
    // and u_inv (right, same op since E^-1 = E in characteristic 2).
    let mut t = 0;
    while t < rows.min(cols) {
        // Minimal-degree pivot in the trailing submatrix bounds degree growth.
        let mut pivot: Option<(usize, usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if let Some(d) = a.get(r, c).degree() {
                    if pivot.is_none_or(|(_, _, pd)| d < pd) {
                        pivot = Some((r, c, d));
                    }
                }
            }
        }
        let Some((pr, pc, _)) = pivot else {
            break; // trailing submatrix is zero
        };
        a.swap_rows(t, pr);
        u.swap_rows(t, pr);
        u_inv.swap_cols(t, pr);
        a.swap_cols(t, pc);
        v.swap_cols(t, pc);
        v_inv.swap_rows(t, pc);

        // Clear row and column t. Non-exact divisions leave smaller-degree
        // entries; the outer loop re-selects the pivot until both are clear.
        let mut dirty = true;
        while dirty {
            dirty = false;
            for r in t + 1..rows {
                if !a.get(r, t).is_zero() {
                    let (q, _) = a.get(r, t).div_rem(a.get(t, t));
                    a.add_row_multiple(t, r, &q);
                    u.add_row_multiple(t, r, &q);
                    u_inv.add_col_multiple(r, t, &q);
                    if !a.get(r, t).is_zero() {
                        // Remainder has smaller degree; promote it to pivot.
                        a.swap_rows(t, r);
                        u.swap_rows(t, r);
                        u_inv.swap_cols(t, r);
                        dirty = true;
                    }
                }
            }
            for c in t + 1..cols {
                if !a.get(t, c).is_zero() {
                    let (q, _) = a.get(t, c).div_rem(a.get(t, t));
                    a.add_col_multiple(t, c, &q);
                    v.add_col_multiple(t, c, &q);
                    v_inv.add_row_multiple(c, t, &q);
                    if !a.get(t, c).is_zero() {
                        a.swap_cols(t, c);
                        v.swap_cols(t, c);
                        v_inv.swap_rows(t, c);
                        dirty = true;
                    }
                }
            }
        }

        // Divisibility: fold any non-divisible trailing entry into column t
        // and re-run the clearing loop on this pivot.
        let mut fixed = false;
        'scan: for r in t + 1..rows {
            for c in t + 1..cols {
                if !a.get(t, t).divides(a.get(r, c)) {
                    let one = TauPoly::one();
                    a.add_col_multiple(c, t, &one);
                    v.add_col_multiple(c, t, &one);
                    v_inv.add_row_multiple(t, c, &one);
                    fixed = true;
                    break 'scan;
                }
            }
        }
        if fixed {
            continue; // redo position t
        }
        t += 1;
    }

    let diagonal: Vec<TauPoly> = (0..rows.min(cols))
        .map(|i| a.get(i, i).clone())
        .take_while(|d| !d.is_zero())
        .collect();
    let rank = diagonal.len();
    SmithDecomposition {
        diagonal,
        u,
        u_inv,
        v,
        v_inv,
        rank,
    }
}
