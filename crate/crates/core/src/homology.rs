//! First homology of surgered manifolds: framing matrices, Smith normal form,
//! and the linking pairing of a lens-space-like `H₁ = Z/p`.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::slopes::{distance, Slope};

pub type IntMatrix = Vec<Vec<i64>>;

/// A framed link in an integral homology sphere: pairwise linking numbers and
/// one surgery slope per component. The diagonal of `linking` is ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramedLink {
    linking: IntMatrix,
    framings: Vec<Slope>,
}

impl FramedLink {
    pub fn new(linking: IntMatrix, framings: Vec<Slope>) -> Result<Self> {
        let n = framings.len();
        if linking.len() != n || linking.iter().any(|row| row.len() != n) {
            return Err(Error::Dimension(format!(
                "{n} framings need an {n}x{n} linking matrix"
            )));
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if linking[i][j] != linking[j][i] {
                    return Err(Error::AsymmetricLinking(i, j));
                }
            }
        }
        Ok(FramedLink { linking, framings })
    }

    /// Builds the link from a row-major linking list of length `n²`.
    pub fn from_row_major(n: usize, linking: &[i64], framings: Vec<Slope>) -> Result<Self> {
        if linking.len() != n * n {
            return Err(Error::Dimension(format!(
                "expected {} linking entries, got {}",
                n * n,
                linking.len()
            )));
        }
        let rows = linking
            .chunks(n.max(1))
            .take(n)
            .map(<[i64]>::to_vec)
            .collect();
        FramedLink::new(rows, framings)
    }

    /// A knot with surgery slope `framing`.
    pub fn knot(framing: Slope) -> Self {
        FramedLink {
            linking: vec![vec![0]],
            framings: vec![framing],
        }
    }

    pub fn components(&self) -> usize {
        self.framings.len()
    }

    pub fn linking(&self) -> &IntMatrix {
        &self.linking
    }

    pub fn framings(&self) -> &[Slope] {
        &self.framings
    }

    /// Drops every component framed `∞`; filling along the meridian undoes the drilling.
    pub fn erase_infinite(&self) -> FramedLink {
        let keep: Vec<usize> = (0..self.components())
            .filter(|&i| !self.framings[i].is_infinite())
            .collect();
        FramedLink {
            linking: keep
                .iter()
                .map(|&i| keep.iter().map(|&j| self.linking[i][j]).collect())
                .collect(),
            framings: keep.iter().map(|&i| self.framings[i]).collect(),
        }
    }
}

/// `F[i][i] = pᵢ`, `F[i][j] = qⱼ·lk(Kᵢ, Kⱼ)`.
pub fn framing_matrix(link: &FramedLink) -> Result<IntMatrix> {
    let n = link.components();
    if let Some(i) = link.framings.iter().position(Slope::is_infinite) {
        return Err(Error::InfiniteFraming(i));
    }
    let mut f = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            f[i][j] = if i == j {
                link.framings[i].num()
            } else {
                link.framings[j]
                    .den()
                    .checked_mul(link.linking[i][j])
                    .ok_or(Error::Overflow("framing matrix"))?
            };
        }
    }
    Ok(f)
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<i64>]) -> Result<i128> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension(
            "determinant of a non-square matrix".into(),
        ));
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j]
                    .checked_mul(a[k][k])
                    .and_then(|x| a[i][k].checked_mul(a[k][j]).and_then(|y| x.checked_sub(y)))
                    .ok_or(Error::Overflow("determinant"))?;
                a[i][j] = v / prev;
            }
        }
        prev = a[k][k];
    }
    Ok(if n == 0 { 1 } else { sign * a[n - 1][n - 1] })
}

/// `|det F(L)| = |H₁|`, with 0 standing for infinite `H₁`.
pub fn h1_order(link: &FramedLink) -> Result<u64> {
    let det = determinant(&framing_matrix(link)?)?;
    u64::try_from(det.unsigned_abs()).map_err(|_| Error::Overflow("h1 order"))
}

/// A finitely generated abelian group `Z^r ⊕ Z/d₁ ⊕ … ⊕ Z/d_k`, `dᵢ | dᵢ₊₁`, `dᵢ ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    invariant_factors: Vec<u64>,
    free_rank: usize,
}

impl AbelianGroup {
    pub fn new(invariant_factors: Vec<u64>, free_rank: usize) -> Result<Self> {
        if invariant_factors.iter().any(|&d| d < 2) {
            return Err(Error::Constraint(
                "invariant factors must be at least 2".into(),
            ));
        }
        if invariant_factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(Error::Constraint(format!(
                "invariant factors {invariant_factors:?} break the divisibility chain"
            )));
        }
        Ok(AbelianGroup {
            invariant_factors,
            free_rank,
        })
    }

    pub fn trivial() -> Self {
        AbelianGroup {
            invariant_factors: Vec::new(),
            free_rank: 0,
        }
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Group order, `None` when the group is infinite.
    pub fn order(&self) -> Option<u64> {
        if self.free_rank > 0 {
            return None;
        }
        self.invariant_factors
            .iter()
            .try_fold(1u64, |acc, &d| acc.checked_mul(d))
    }

    /// Order with the `0 = infinite` convention used for `|H₁|`.
    pub fn order_or_zero(&self) -> u64 {
        self.order().unwrap_or(0)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Cokernel of `m` (columns are relations on the row generators), read off
/// from its Smith normal form.
pub fn smith_normal_form(m: &[Vec<i64>]) -> Result<AbelianGroup> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    if m.iter().any(|r| r.len() != cols) {
        return Err(Error::Dimension("ragged matrix".into()));
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let diag = snf_diagonal(&mut a, rows, cols)?;

    let mut factors = Vec::new();
    let mut free_rank = rows - diag.len();
    for d in diag {
        match d {
            0 => free_rank += 1,
            1 => {}
            d => factors.push(u64::try_from(d).map_err(|_| Error::Overflow("smith normal form"))?),
        }
    }
    // re-validates the divisibility chain
    AbelianGroup::new(factors, free_rank)
}

fn snf_diagonal(a: &mut [Vec<i128>], rows: usize, cols: usize) -> Result<Vec<i128>> {
    let n = rows.min(cols);
    let mut diag = Vec::with_capacity(n);
    for t in 0..n {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].unsigned_abs());
            let Some((pi, pj)) = pivot else {
                diag.extend(std::iter::repeat_n(0, n - t));
                return Ok(diag);
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }

            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let f = Integer::div_floor(&a[i][t], &p);
                if f != 0 {
                    for j in t..cols {
                        a[i][j] = checked_sub_mul(a[i][j], f, a[t][j])?;
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let f = Integer::div_floor(&a[t][j], &p);
                if f != 0 {
                    for i in t..rows {
                        a[i][j] = checked_sub_mul(a[i][j], f, a[i][t])?;
                    }
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // pivot must divide the rest of the block
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| a[i][j] % p != 0);
            match bad {
                Some((i, _)) => {
                    for j in t..cols {
                        a[t][j] = a[t][j]
                            .checked_add(a[i][j])
                            .ok_or(Error::Overflow("smith normal form"))?;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    Ok(diag)
}

fn checked_sub_mul(x: i128, f: i128, y: i128) -> Result<i128> {
    f.checked_mul(y)
        .and_then(|fy| x.checked_sub(fy))
        .ok_or(Error::Overflow("smith normal form"))
}

/// `H₁` of the surgered manifold as an abelian group; components framed `∞`
/// are erased first.
pub fn h1_group(link: &FramedLink) -> Result<AbelianGroup> {
    let link = link.erase_infinite();
    smith_normal_form(&framing_matrix(&link)?)
}

/// `|H₁(M(α))| = c_M · Δ(α, λ_M)` for a one-cusped `M` with rational longitude `λ_M`.
pub fn watson_order(c: u64, lambda: Slope, alpha: Slope) -> u64 {
    c * distance(alpha, lambda)
}

/// Self-linking `−q/p mod 1` of the meridian class in `H₁(S³_K(p/q)) = Z/p`,
/// returned in `[0, 1)`.
pub fn meridian_self_linking(p: i64, q: i64) -> Result<Ratio<i64>> {
    if p <= 0 {
        return Err(Error::NonPositiveModulus(p));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { a: p, b: q });
    }
    Ok(Ratio::new((-(q as i128)).rem_euclid(p as i128) as i64, p))
}
