//! Keys for the results each table row and verdict rests on.
//!
//! The key is what machine output prints; the text is the human-readable
//! statement shown by `tables dump` and in text reports.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Citation {
    pub key: &'static str,
    pub text: &'static str,
}

impl fmt::Display for Citation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key)
    }
}

macro_rules! citations {
    ($($name:ident = $key:literal : $text:literal;)*) => {
        $(pub const $name: Citation = Citation { key: $key, text: $text };)*

        /// Every citation, in declaration order.
        pub const ALL: &[Citation] = &[$($name),*];
    };
}

citations! {
    BOYER_LINES = "boyer-lines":
        "Boyer-Lines: Delta''(1) != 0 rules out orientation-preserving homeomorphisms between distinct surgeries";
    NI_WU = "ni-wu":
        "Ni-Wu: truly cosmetic slopes on a nontrivial knot in S^3 satisfy r = -s, q^2 = -1 mod p, tau = 0";
    NI_WU_EULER = "ni-wu-euler":
        "Ni-Wu: a truly cosmetic pair p/q, -p/q forces the Euler characteristic of HF_red to vanish";
    LACKENBY_MEYERHOFF = "lackenby-meyerhoff":
        "Lackenby-Meyerhoff: exceptional slopes on a hyperbolic one-cusped manifold are at distance <= 8";
    DISTANCE_TABLE = "distance-table":
        "Maximal distance between exceptional slopes by filling type (reducible, cyclic, finite, toroidal, small Seifert)";
    GORDON_LUECKE_REDUCIBLE = "gordon-luecke-reducible":
        "Gordon-Luecke: two reducible fillings are at distance <= 1";
    LINKING_FORM = "linking-form":
        "Meridian self-linking -q/p must match up to a unit square: q = q' u^2 mod p";
    COSMETIC_PAIR_TABLE = "cosmetic-pair-table":
        "Exceptional truly cosmetic pairs on hyperbolic knots lie in {(2,-2), (1,-1), (1/2,-1/2), (1/3,-1/3), (1/4,-1/4)}";
    GORDON_WU = "gordon-wu":
        "Gordon-Wu: hyperbolic knots with toroidal slopes at distance >= 4 are L1(n), L2(n), L3(n) or the figure-8";
    GORDON_LUECKE_DENOMINATOR = "gordon-luecke-denominator":
        "Gordon-Luecke: a toroidal slope p/q on a hyperbolic knot has |q| <= 2";
    GORDON_LUECKE_HALF_INTEGRAL = "gordon-luecke-half-integral":
        "Gordon-Luecke: non-integral toroidal surgery only on Eudave-Munoz knots, at their unique half-integral slope";
    H1_DISCRIMINATION = "h1-discrimination":
        "Distance-4 toroidal pairs have |H_1| = |2-9n| vs |2+9n| (L2) or 0 vs 4 (L1), never equal for n != 0";
    LSPACE_ALEXANDER = "lspace-alexander":
        "Ozsvath-Szabo: knots with an L-space surgery have Alexander polynomial (-1)^k + sum (-1)^(k-j) (T^n_j + T^-n_j)";
    SEIFERT_EVEN_SUPPORT = "seifert-even-support":
        "Ozsvath-Szabo: HF_red of a Seifert fibred rational homology sphere is supported in even degree (for one orientation)";
    ICHIHARA_MASAI = "ichihara-masai":
        "Ichihara-Masai: exceptional surgeries on hyperbolic alternating knots";
    WU_MONTESINOS = "wu-montesinos":
        "Wu: toroidal surgeries on length-3 Montesinos knots";
    WU_ARBORESCENT = "wu-arborescent":
        "Wu: exceptional surgeries on type II arborescent knots";
    FIGURE8_EXCEPTIONAL = "figure8-exceptional":
        "Exceptional slopes of the figure-8 exterior: inf, 0, +-1, +-2, +-3, +-4";
    OS_FRACTIONAL_D = "os-fractional-d":
        "Ozsvath-Szabo: d_1/2(S^3_K(0)) - 1/2 <= d(S^3_K(1/(n+1))) <= d(S^3_K(1/n)) <= 0";
    OS_ZERO_SURGERY_D = "os-zero-surgery-d":
        "Ozsvath-Szabo: d_1/2(S^3_K(0)) - 1/2 = d(S^3_K(1))";
    COSMETIC_D_VANISHES = "cosmetic-d-vanishes":
        "An exceptional truly cosmetic surgery forces d(S^3_K(1/n)) = 0 for every n";
    OS_TORSION_BOUND = "os-torsion-bound":
        "Ozsvath-Szabo torsion bound, with d(S^3_K(1)) = 0 from Rustamov and Casson: |t_0| + 2 sum |t_i| <= rank HF_red(S^3_K(1))";
    CASSON_SURGERY = "casson-surgery":
        "Casson surgery formula lambda(S^3_K(1)) = lambda(S^3) + lambda(L(1,1)) + Delta''(1)";
    WATSON = "watson":
        "Watson: |H_1(M(alpha))| = c_M Delta(alpha, lambda_M)";
    SCOPE = "scope":
        "Input hypotheses: nontrivial knot, hyperbolic, slopes exceptional";
}

pub fn lookup(key: &str) -> Option<Citation> {
    ALL.iter().copied().find(|c| c.key == key)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_unique_and_resolvable() {
        for (i, c) in ALL.iter().enumerate() {
            assert!(
                ALL[i + 1..].iter().all(|d| d.key != c.key),
                "duplicate key {}",
                c.key
            );
            assert_eq!(lookup(c.key), Some(*c));
            assert!(!c.key.contains(char::is_whitespace));
            assert!(!c.text.contains('\t'));
        }
    }
}
