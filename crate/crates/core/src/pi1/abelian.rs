use super::Word;
use serde::{Deserialize, Serialize};
use std::fmt;

/// `Z^free_rank x Z/t1 x ... x Z/tk` with `t1 | t2 | ... | tk`, all `ti > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianGroup {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|t| format!("Z/{t}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.insert(0, "Z".into()),
            r => parts.insert(0, format!("Z^{r}")),
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" x "))
        }
    }
}

/// Abelianization of `<generators | relators>` via Smith normal form.
pub fn abelian_invariants(generators: usize, relators: &[Word]) -> AbelianGroup {
    let mut m: Vec<Vec<i128>> = relators
        .iter()
        .map(|r| r.exponent_sums(generators).into_iter().map(i128::from).collect())
        .collect();
    let diag = smith_diagonal(&mut m, generators);
    let rank = diag.iter().filter(|&&d| d != 0).count();
    AbelianGroup {
        free_rank: generators - rank,
        torsion: diag
            .into_iter()
            .filter(|&d| d > 1)
            .map(|d| d as u64)
            .collect(),
    }
}

/// Nonzero invariant factors, absolute values, in divisibility order.
fn smith_diagonal(m: &mut [Vec<i128>], cols: usize) -> Vec<i128> {
    let rows = m.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| m[i][j] != 0)
            .min_by_key(|&(i, j)| m[i][j].abs());
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = m[t][t];
            let mut dirty = false;
            for i in t + 1..rows {
                let q = m[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        m[i][j] -= q * m[t][j];
                    }
                }
                dirty |= m[i][t] != 0;
            }
            for j in t + 1..cols {
                let q = m[t][j] / p;
                if q != 0 {
                    for row in m.iter_mut() {
                        row[j] -= q * row[t];
                    }
                }
                dirty |= m[t][j] != 0;
            }
            if !dirty {
                // Divisibility: fold a non-multiple entry into the pivot row.
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| m[i][j] % p != 0);
                match bad {
                    Some((i, _)) => {
                        for j in t..cols {
                            m[t][j] += m[i][j];
                        }
                    }
                    None => break,
                }
            }
            // Move the smallest nonzero entry of row/column t into the pivot.
            let best_row = (t..rows).filter(|&i| m[i][t] != 0).min_by_key(|&i| m[i][t].abs());
            let best_col = (t..cols).filter(|&j| m[t][j] != 0).min_by_key(|&j| m[t][j].abs());
            match (best_row, best_col) {
                (Some(i), Some(j)) if m[i][t].abs() <= m[t][j].abs() => m.swap(t, i),
                (_, Some(j)) => {
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                }
                (Some(i), None) => m.swap(t, i),
                (None, None) => unreachable!(),
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}
