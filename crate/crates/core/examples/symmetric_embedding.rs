//! Completing AG_2(3,4) to a symmetric 2-(85,21,5) design.

use embedrank::embedding::{sym_embedding_code, sym_embedding_search};
use embedrank::geometry::{ag_design, pg_design};
use embedrank::iso::are_isomorphic;

fn main() -> embedrank::Result<()> {
    let ag = ag_design(3, 4, 2)?.0;
    let code = sym_embedding_code(&ag, 2)?;
    println!("[{}, {}] code", code.length(), code.dim());
    let res = sym_embedding_search(&ag, 2)?;
    println!(
        "{} words of weight {}, {} needed",
        res.weight_k_codewords, res.k, res.required
    );
    let pg = pg_design(3, 4, 2)?;
    for d in &res.designs {
        println!(
            "found a 2-({}, 21, 5) design, isomorphic to PG_2(3,4): {}",
            d.v(),
            are_isomorphic(d, &pg)
        );
    }
    Ok(())
}
