//! Reed-Muller codes, a bent function and the symmetric design it defines.

use embedrank::codes::{codeword_hex, inner_product_bent, is_bent, rm_code, sdp_code};

fn main() -> embedrank::Result<()> {
    for (r, m) in [(1, 3), (1, 4), (2, 4), (2, 5)] {
        let c = rm_code(r, m)?;
        println!(
            "RM({r},{m}) = [{}, {}, {:?}]",
            c.length(),
            c.dim(),
            c.min_weight()?
        );
    }
    let f = inner_product_bent(2);
    println!(
        "x0x1 + x2x3 bent: {}  truth table {}",
        is_bent(&f),
        codeword_hex(&f, 2)
    );
    let code = sdp_code(&f)?;
    let d = code.min_weight_design()?;
    let p = d.verify_tdesign(2).expect("2-design");
    println!(
        "minimum-weight words of the [{}, {}] code: 2-({}, {}, {})",
        code.length(),
        code.dim(),
        p.v,
        p.k,
        p.lambda
    );
    println!(
        "2-rank {}, residual 2-rank {}",
        d.incidence_matrix(2)?.rank(),
        d.residual(0, false)?.incidence_matrix(2)?.rank()
    );
    Ok(())
}
