//! Every affine resolvable 2-(64,16,5) design sharing a residual with AG_2(3,4).

use embedrank::embedding::embedding_search;
use embedrank::geometry::ag_design;

fn main() -> embedrank::Result<()> {
    let ag = ag_design(3, 4, 2)?.0;
    let res = embedding_search(&ag, 0, None)?;
    println!(
        "{} candidate rows, {} viable codes",
        res.candidates_examined, res.viable_codes
    );
    for c in &res.iso_classes {
        println!(
            "  {} designs with |Aut| = {} ({})",
            c.multiplicity,
            c.aut_order,
            &c.digest[..16]
        );
    }
    println!("{:#}", res.to_json()["iso_classes"]);
    Ok(())
}
