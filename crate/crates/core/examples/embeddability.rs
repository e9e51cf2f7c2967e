//! The rank test for linear embeddability and its minimum-weight certificate.

use embedrank::embedding::{embeddability, thm1_certify};
use embedrank::geometry::{ag_design, pg_design};

fn main() -> embedrank::Result<()> {
    let ag = ag_design(3, 4, 2)?.0;
    let r = embeddability(&ag, 0, 2)?;
    println!(
        "AG_2(3,4) block 0 over GF(2): {} vs {} + 1, embeddable {}",
        r.rank_full, r.rank_residual, r.embeddable
    );

    let fano = pg_design(2, 2, 1)?;
    for p in [2, 3, 5] {
        let r = embeddability(&fano, 0, p)?;
        println!(
            "Fano over GF({p}): ranks {} and {}, embeddable {}",
            r.rank_full, r.rank_residual, r.embeddable
        );
    }

    let entries = thm1_certify(&ag, 2)?;
    let certified = entries.iter().filter(|e| e.certified).count();
    let confirmed = entries
        .iter()
        .filter(|e| e.certified && e.embeddable)
        .count();
    println!(
        "AG_2(3,4): {certified} of {} blocks certified, {confirmed} confirmed by rank",
        entries.len()
    );
    Ok(())
}
