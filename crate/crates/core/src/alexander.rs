//! Symmetric Laurent polynomials and the Alexander-polynomial invariants that
//! feed the surgery obstructions.

use std::fmt;

use crate::error::{Error, Result};
use crate::homology::determinant;

/// `a₀ + Σ_{i≥1} aᵢ (Tⁱ + T⁻ⁱ)`, stored as `[a₀, a₁, …, a_d]` with `a_d ≠ 0`
/// unless `d = 0`, and normalized so that the value at `T = 1` is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymmetricLaurent {
    coeffs: Vec<i64>,
}

impl SymmetricLaurent {
    pub fn new(mut coeffs: Vec<i64>) -> Result<Self> {
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        let at_one = coeffs
            .iter()
            .skip(1)
            .try_fold(coeffs[0], |acc, &a| {
                a.checked_mul(2).and_then(|a2| acc.checked_add(a2))
            })
            .ok_or(Error::Overflow("polynomial normalization"))?;
        if at_one != 1 {
            return Err(Error::NotNormalized(at_one));
        }
        Ok(SymmetricLaurent { coeffs })
    }

    /// Builds from `(i, aᵢ)` pairs with `i ≥ 0`; absent indices are zero.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self> {
        let mut coeffs = Vec::new();
        let mut seen = Vec::new();
        for &(i, a) in pairs {
            let i = usize::try_from(i).map_err(|_| {
                Error::Constraint(format!("negative exponent {i}; list only i >= 0"))
            })?;
            if seen.contains(&i) {
                return Err(Error::Constraint(format!("exponent {i} listed twice")));
            }
            seen.push(i);
            if coeffs.len() <= i {
                coeffs.resize(i + 1, 0);
            }
            coeffs[i] = a;
        }
        SymmetricLaurent::new(coeffs)
    }

    pub fn one() -> Self {
        SymmetricLaurent { coeffs: vec![1] }
    }

    /// Nonzero `(i, aᵢ)` pairs; index 0 is always present.
    pub fn to_pairs(&self) -> Vec<(i64, i64)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|&(i, &a)| i == 0 || a != 0)
            .map(|(i, &a)| (i as i64, a))
            .collect()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `Tⁱ` for any integer `i`.
    pub fn coefficient(&self, i: i64) -> i64 {
        self.coeffs
            .get(i.unsigned_abs() as usize)
            .copied()
            .unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The constant polynomial 1, i.e. the Alexander polynomial of the unknot.
    pub fn is_trivial(&self) -> bool {
        self.coeffs == [1]
    }
}

impl fmt::Display for SymmetricLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree() as i64;
        let mut first = true;
        for e in (-d..=d).rev() {
            let a = self.coefficient(e);
            if a == 0 {
                continue;
            }
            let sign = if a < 0 { "-" } else { "+" };
            if first {
                if a < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = a.unsigned_abs();
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}")?;
                    }
                    match e {
                        1 => write!(f, "T")?,
                        _ => write!(f, "T^{e}")?,
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A square integer matrix of even size `2g` with `det(V − Vᵀ) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertMatrix {
    rows: Vec<Vec<i64>>,
}

impl SeifertMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidSeifert("matrix is not square".into()));
        }
        if !n.is_multiple_of(2) {
            return Err(Error::InvalidSeifert(format!("size {n} is odd")));
        }
        let skew: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| rows[i][j] - rows[j][i]).collect())
            .collect();
        let det = determinant(&skew)?;
        if det != 1 {
            return Err(Error::InvalidSeifert(format!(
                "det(V - V^T) = {det}, expected 1"
            )));
        }
        Ok(SeifertMatrix { rows })
    }

    pub fn from_row_major(size: usize, entries: &[i64]) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::Dimension(format!(
                "Seifert matrix of size {size} needs {} entries, got {}",
                size * size,
                entries.len()
            )));
        }
        SeifertMatrix::new(
            entries
                .chunks(size.max(1))
                .take(size)
                .map(<[i64]>::to_vec)
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn genus(&self) -> usize {
        self.rows.len() / 2
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn row_major(&self) -> Vec<i64> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn transpose(&self) -> SeifertMatrix {
        let n = self.size();
        SeifertMatrix {
            rows: (0..n)
                .map(|i| (0..n).map(|j| self.rows[j][i]).collect())
                .collect(),
        }
    }
}

// Dense polynomials over Z in one variable, lowest degree first.
type Poly = Vec<i128>;

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn poly_mul(a: &Poly, b: &Poly) -> Result<Poly> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = x
                .checked_mul(y)
                .and_then(|xy| out[i + j].checked_add(xy))
                .ok_or(Error::Overflow("polynomial determinant"))?;
        }
    }
    Ok(trim(out))
}

fn poly_sub(a: &Poly, b: &Poly) -> Result<Poly> {
    let mut out = vec![0i128; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = x
            .checked_sub(y)
            .ok_or(Error::Overflow("polynomial determinant"))?;
    }
    Ok(trim(out))
}

fn poly_div_exact(num: &Poly, den: &Poly) -> Result<Poly> {
    let den_lead = *den.last().expect("division by the zero polynomial");
    let mut rem = num.clone();
    if rem.len() < den.len() {
        return if rem.is_empty() {
            Ok(Vec::new())
        } else {
            Err(inexact())
        };
    }
    let mut quot = vec![0i128; rem.len() - den.len() + 1];
    for k in (0..quot.len()).rev() {
        let top = rem[k + den.len() - 1];
        if top % den_lead != 0 {
            return Err(inexact());
        }
        let c = top / den_lead;
        quot[k] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[k + j] -= c * d;
        }
    }
    if rem.iter().any(|&r| r != 0) {
        return Err(inexact());
    }
    Ok(trim(quot))
}

fn inexact() -> Error {
    Error::InvalidSeifert("inexact division in polynomial determinant".into())
}

/// `det(M)` for a matrix over `Z[t]`, by Bareiss elimination.
fn poly_determinant(mut a: Vec<Vec<Poly>>) -> Result<Poly> {
    let n = a.len();
    if n == 0 {
        return Ok(vec![1]);
    }
    let mut negate = false;
    let mut prev: Poly = vec![1];
    for k in 0..n {
        if a[k][k].is_empty() {
            match (k + 1..n).find(|&r| !a[r][k].is_empty()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(Vec::new()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross = poly_sub(
                    &poly_mul(&a[i][j], &a[k][k])?,
                    &poly_mul(&a[i][k], &a[k][j])?,
                )?;
                a[i][j] = poly_div_exact(&cross, &prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate {
        det.into_iter().map(|c| -c).collect()
    } else {
        det
    })
}

/// Normalized Alexander polynomial `det(T^{1/2}V − T^{−1/2}Vᵀ)`, computed as
/// `T^{−g}·det(TV − Vᵀ)` and sign-corrected so that `Δ(1) = 1`.
pub fn from_seifert_matrix(v: &SeifertMatrix) -> Result<SymmetricLaurent> {
    let n = v.size();
    let g = v.genus();
    let entries: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| trim(vec![-(v.rows[j][i] as i128), v.rows[i][j] as i128]))
                .collect()
        })
        .collect();
    let mut det = poly_determinant(entries)?;
    if det.len() > 2 * g + 1 {
        return Err(Error::InvalidSeifert(
            "determinant degree exceeds 2g".into(),
        ));
    }
    det.resize(2 * g + 1, 0);
    if (0..=g).any(|i| det[g + i] != det[g - i]) {
        return Err(Error::InvalidSeifert(
            "determinant is not palindromic".into(),
        ));
    }
    let sign = if det.iter().sum::<i128>() < 0 { -1 } else { 1 };
    let coeffs = det[g..]
        .iter()
        .map(|&c| i64::try_from(sign * c).map_err(|_| Error::Overflow("Alexander polynomial")))
        .collect::<Result<Vec<_>>>()?;
    SymmetricLaurent::new(coeffs)
}

/// `Δ''(1) = 2·Σ_{i≥1} i²·aᵢ`.
pub fn second_derivative_at_one(p: &SymmetricLaurent) -> i64 {
    let s: i128 = p
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, &a)| (i as i128) * (i as i128) * a as i128)
        .sum();
    i64::try_from(2 * s).expect("second derivative overflows i64")
}

/// Torsion coefficients `tᵢ = Σ_{j≥1} j·a_{i+j}` for `i = 0..=d`; `t_d` is always 0.
pub fn torsion_invariants(p: &SymmetricLaurent) -> Vec<i64> {
    let d = p.degree();
    (0..=d)
        .map(|i| (1..=d - i).map(|j| j as i64 * p.coeffs[i + j]).sum())
        .collect()
}

/// `|t₀| + 2·Σ_{i≥1} |tᵢ|`, the quantity bounded by the reduced Floer rank.
pub fn torsion_weight(p: &SymmetricLaurent) -> u64 {
    let t = torsion_invariants(p);
    t[0].unsigned_abs() + 2 * t[1..].iter().map(|x| x.unsigned_abs()).sum::<u64>()
}

/// Strictly increasing positive exponents `n₁ < … < n_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapSequence(Vec<u64>);

impl GapSequence {
    pub fn new(gaps: Vec<u64>) -> Result<Self> {
        if gaps.first() == Some(&0) {
            return Err(Error::InvalidGaps("exponents must be positive".into()));
        }
        if gaps.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGaps(format!(
                "{gaps:?} is not strictly increasing"
            )));
        }
        Ok(GapSequence(gaps))
    }

    pub fn gaps(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(−1)^k + Σ_j (−1)^{k−j} (T^{n_j} + T^{−n_j})`.
    pub fn to_polynomial(&self) -> SymmetricLaurent {
        let k = self.0.len();
        let top = self.0.last().copied().unwrap_or(0) as usize;
        let mut coeffs = vec![0i64; top + 1];
        coeffs[0] = if k.is_multiple_of(2) { 1 } else { -1 };
        for (j, &n) in self.0.iter().enumerate() {
            coeffs[n as usize] = if (k - 1 - j).is_multiple_of(2) { 1 } else { -1 };
        }
        SymmetricLaurent::new(coeffs).expect("L-space form is normalized")
    }
}

/// Recognizes the coefficient shape forced on knots with an L-space surgery:
/// nonzero coefficients ±1 alternating downward from `+1` at the top, with
/// constant term `(−1)^k`. Returns the exponents `n₁ < … < n_k`.
pub fn lspace_form(p: &SymmetricLaurent) -> Option<GapSequence> {
    let support: Vec<(usize, i64)> = p
        .coeffs
        .iter()
        .enumerate()
        .skip(1)
        .filter(|&(_, &a)| a != 0)
        .map(|(i, &a)| (i, a))
        .collect();
    let k = support.len();
    let expected = |steps_from_top: usize| {
        if steps_from_top.is_multiple_of(2) {
            1
        } else {
            -1
        }
    };
    if p.coeffs[0] != expected(k) {
        return None;
    }
    for (j, &(_, a)) in support.iter().enumerate() {
        if a != expected(k - 1 - j) {
            return None;
        }
    }
    Some(GapSequence(
        support.into_iter().map(|(i, _)| i as u64).collect(),
    ))
}

/// `Δ''(1) = 2·Σ_j (−1)^{k−j} n_j²` for a polynomial in L-space form.
pub fn second_derivative_from_gaps(g: &GapSequence) -> Result<i64> {
    let k = g.len();
    if k == 0 {
        return Err(Error::InvalidGaps("empty gap sequence".into()));
    }
    let s: i128 =
        g.0.iter()
            .enumerate()
            .map(|(j, &n)| {
                let sq = (n as i128) * (n as i128);
                if (k - 1 - j).is_multiple_of(2) {
                    sq
                } else {
                    -sq
                }
            })
            .sum();
    i64::try_from(2 * s).map_err(|_| Error::Overflow("gap formula"))
}

/// `2n + 1 − n(T + T⁻¹)`, the Alexander polynomial of the twist knots `K[2n, ±2]`.
pub fn twist_knot_polynomial(n: i64) -> Result<SymmetricLaurent> {
    if n == 0 {
        return Err(Error::Constraint(
            "twist parameter n = 0 is the unknot".into(),
        ));
    }
    let a0 = n
        .checked_mul(2)
        .and_then(|x| x.checked_add(1))
        .ok_or(Error::Overflow("twist knot polynomial"))?;
    SymmetricLaurent::new(vec![a0, -n])
}

/// Casson invariant of `+1` surgery as `λ(S³) + λ(L(1,1)) + Δ''(1) = Δ''(1)`.
///
/// The usual surgery formula carries a factor ½ on `Δ''(1)`; it is omitted
/// here. Only the vanishing of the value is ever used, which both
/// normalizations agree on.
pub fn casson_plus_one_surgery(p: &SymmetricLaurent) -> i64 {
    second_derivative_at_one(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> SymmetricLaurent {
        SymmetricLaurent::new(c.to_vec()).unwrap()
    }

    #[test]
    fn normalization_is_enforced() {
        assert_eq!(
            SymmetricLaurent::new(vec![1, 1]),
            Err(Error::NotNormalized(3))
        );
        assert_eq!(poly(&[-1, 1, 0, 0]).coeffs(), &[-1, 1]);
        assert!(SymmetricLaurent::new(vec![]).is_err());
        assert!(SymmetricLaurent::from_pairs(&[(0, 1), (0, 1)]).is_err());
        assert!(SymmetricLaurent::from_pairs(&[(-1, 1)]).is_err());
        assert_eq!(
            SymmetricLaurent::from_pairs(&[(1, 1), (0, -1)]).unwrap(),
            poly(&[-1, 1])
        );
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[-1, 1]).to_string(), "T - 1 + T^-1");
        assert_eq!(poly(&[3, -1]).to_string(), "-T + 3 - T^-1");
        assert_eq!(poly(&[1]).to_string(), "1");
        assert_eq!(poly(&[5, -2]).to_string(), "-2T + 5 - 2T^-1");
    }

    #[test]
    fn seifert_examples() {
        let trefoil = SeifertMatrix::from_row_major(2, &[-1, 1, 0, -1]).unwrap();
        assert_eq!(from_seifert_matrix(&trefoil).unwrap(), poly(&[-1, 1]));
        let fig8 = SeifertMatrix::from_row_major(2, &[1, 1, 0, -1]).unwrap();
        assert_eq!(from_seifert_matrix(&fig8).unwrap(), poly(&[3, -1]));
        let unknot = SeifertMatrix::new(vec![]).unwrap();
        assert_eq!(
            from_seifert_matrix(&unknot).unwrap(),
            SymmetricLaurent::one()
        );
    }

    #[test]
    fn invalid_seifert_rejected() {
        assert!(SeifertMatrix::from_row_major(2, &[1, 0, 0, 1]).is_err());
        assert!(SeifertMatrix::from_row_major(1, &[1]).is_err());
        assert!(SeifertMatrix::from_row_major(2, &[1, 0, 0]).is_err());
        // det(V - V^T) = 4
        assert!(SeifertMatrix::from_row_major(2, &[0, 2, 0, 0]).is_err());
    }

    #[test]
    fn second_derivative_examples() {
        assert_eq!(
            second_derivative_at_one(&twist_knot_polynomial(3).unwrap()),
            -6
        );
        assert_eq!(second_derivative_at_one(&poly(&[-1, 1])), 2);
        assert_eq!(second_derivative_at_one(&poly(&[1])), 0);
    }

    #[test]
    fn torsion_examples() {
        assert_eq!(torsion_invariants(&poly(&[-1, 1])), vec![1, 0]);
        assert_eq!(torsion_invariants(&poly(&[3, -1])), vec![-1, 0]);
        assert_eq!(torsion_invariants(&poly(&[1])), vec![0]);
        // T^3 - T^2 + 1 - T^-2 + T^-3: t0 = 2·(-1) + 3·1, t1 = 1·(-1) + 2·1, t2 = 1
        assert_eq!(torsion_invariants(&poly(&[1, 0, -1, 1])), vec![1, 1, 1, 0]);
        assert_eq!(torsion_weight(&poly(&[1, 0, -1, 1])), 5);
    }

    #[test]
    fn lspace_examples() {
        assert_eq!(lspace_form(&poly(&[-1, 1])).unwrap().gaps(), &[1]);
        assert_eq!(lspace_form(&poly(&[3, -1])), None);
        assert_eq!(lspace_form(&poly(&[1, -1, 1])).unwrap().gaps(), &[1, 2]);
        assert_eq!(lspace_form(&poly(&[1, 0, -1, 1])).unwrap().gaps(), &[2, 3]);
        assert_eq!(lspace_form(&poly(&[1])).unwrap().gaps(), &[] as &[u64]);
        // top coefficient must be +1
        assert_eq!(lspace_form(&poly(&[3, -1, 0])), None);
        assert_eq!(lspace_form(&poly(&[7, -4, 1])), None);
    }

    #[test]
    fn gap_examples() {
        let g = |v: &[u64]| GapSequence::new(v.to_vec()).unwrap();
        assert_eq!(second_derivative_from_gaps(&g(&[1])).unwrap(), 2);
        assert_eq!(second_derivative_from_gaps(&g(&[1, 2])).unwrap(), 6);
        assert_eq!(second_derivative_from_gaps(&g(&[2, 3])).unwrap(), 10);
        assert!(second_derivative_from_gaps(&g(&[])).is_err());
        assert!(GapSequence::new(vec![2, 2]).is_err());
        assert!(GapSequence::new(vec![0, 1]).is_err());
        assert_eq!(g(&[1, 2]).to_polynomial(), poly(&[1, -1, 1]));
        assert_eq!(g(&[]).to_polynomial(), SymmetricLaurent::one());
    }

    #[test]
    fn twist_examples() {
        assert_eq!(twist_knot_polynomial(1).unwrap(), poly(&[3, -1]));
        assert_eq!(twist_knot_polynomial(-1).unwrap(), poly(&[-1, 1]));
        assert_eq!(twist_knot_polynomial(2).unwrap(), poly(&[5, -2]));
        assert!(twist_knot_polynomial(0).is_err());
    }

    #[test]
    fn casson_examples() {
        assert_eq!(casson_plus_one_surgery(&poly(&[-1, 1])), 2);
        assert_eq!(casson_plus_one_surgery(&poly(&[7, -4, 1])), 0);
        assert_eq!(casson_plus_one_surgery(&poly(&[3, -1])), -2);
    }
}
