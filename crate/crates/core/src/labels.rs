//! Caption strings for real forms and symmetric superpairs.
//!
//! Captions are stored in their Unicode spelling; [`ascii`] gives the
//! transliteration used by plain-text output.

pub const A_SL_R: &str = "(p)sl_r(m|n)/sl_r(p)⊕sl_r(m−p)⊕u(1)⊕ℝ";
pub const A_SU_STAR_O_STAR: &str = "su*(2m|2n)/o*(2m)⊕o*(2n)";
pub const A_SU_STAR_SP: &str = "su*(2m|2n)/sp(2m,2p)⊕sp(2n,2q)";
pub const A_SU_OSP_STAR: &str = "(p)su(m,p|n,q)/osp*(m,p|n)";
pub const A_SU_OSP: &str = "(p)su(m,p|n,q)/osp(m,p|n)";
pub const A_SU_SU_IR: &str = "(p)su(m,p|n,q)/su(p,m−p)⊕su(r,n−r)⊕iℝ";
pub const A_SU_UPQ: &str = "(p)su(m,p|n,q)/upq(m,p)";

pub const B_SP: &str = "osp(m,p|2n)/(sp(m,ℝ))";
pub const B_SP_SO: &str = "osp(m,p|2n)/(sp(m,ℝ)⊕so(p,q))";

pub const C_SP_R: &str = "osp(2|2n)/(sp(n,ℝ)⊕so(2))";
pub const C_SP_RS: &str = "osp(2|2n)/(sp(r,s)⊕so(2))";

pub const D_SP_SO_STAR: &str = "osp*(2m|2n)/(sp(r,s)⊕so*(2p))";
pub const D_SP_R_SO: &str = "osp*(2m|2n)/(sp(m,ℝ)⊕so(p,q))";

pub const D21_SL3: &str = "D(α)/(sl(2,ℝ)⊕sl(2,ℝ)⊕sl(2,ℝ))";
pub const D21_SU_SU_SL: &str = "D(α)/(su(2)⊕su(2)⊕sl(2,ℝ))";
pub const D21_SLC_SL: &str = "D(α)/(sl(2,ℂ)⊕sl(2,ℝ))";

pub const F4_SO16: &str = "F(4)/(su(2,ℝ)⊕so(1,6))";
pub const F4_SO25: &str = "F(4)/(su(2,ℝ)⊕so(2,5))";
pub const F4_SO34: &str = "F(4)/(sl(2,ℝ)⊕so(3,4))";
pub const F4_SO7: &str = "F(4)/(sl(2,ℝ)⊕so(7))";

pub const G3_GC: &str = "G(3)/(sl(2,ℝ)⊕g_c)";
pub const G3_GS: &str = "G(3)/(sl(2,ℝ)⊕g_s)";

pub const ALL_CAPTIONS: &[&str] = &[
    A_SL_R,
    A_SU_STAR_O_STAR,
    A_SU_STAR_SP,
    A_SU_OSP_STAR,
    A_SU_OSP,
    A_SU_SU_IR,
    A_SU_UPQ,
    B_SP,
    B_SP_SO,
    C_SP_R,
    C_SP_RS,
    D_SP_SO_STAR,
    D_SP_R_SO,
    D21_SL3,
    D21_SU_SU_SL,
    D21_SLC_SL,
    F4_SO16,
    F4_SO25,
    F4_SO34,
    F4_SO7,
    G3_GC,
    G3_GS,
];

pub const UNLABELED: &str = "unlabeled";
pub const UNCLASSIFIED: &str = "unclassified";

/// `⊕ -> +`, `ℝ -> R`, `ℂ -> C`, `− -> -`, `α -> a`.
pub fn ascii(s: &str) -> String {
    s.chars()
        .map(|c| match c {
            '⊕' => "+".to_string(),
            'ℝ' => "R".to_string(),
            'ℂ' => "C".to_string(),
            '−' => "-".to_string(),
            'α' => "a".to_string(),
            c => c.to_string(),
        })
        .collect()
}

/// Splits a caption at its top-level `/` into numerator and denominator.
pub fn split_caption(caption: &str) -> (&str, &str) {
    caption.split_once('/').unwrap_or((caption, ""))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transliteration() {
        assert_eq!(ascii(A_SL_R), "(p)sl_r(m|n)/sl_r(p)+sl_r(m-p)+u(1)+R");
        assert_eq!(ascii(D21_SLC_SL), "D(a)/(sl(2,C)+sl(2,R))");
    }

    #[test]
    fn captions_split_once() {
        assert_eq!(split_caption(C_SP_R), ("osp(2|2n)", "(sp(n,ℝ)⊕so(2))"));
        assert!(ALL_CAPTIONS.iter().all(|c| c.contains('/')));
    }

    #[test]
    fn parentheses_balance() {
        for c in ALL_CAPTIONS {
            let open = c.matches('(').count();
            let close = c.matches(')').count();
            assert_eq!(open, close, "{c}");
        }
    }
}
