//! Codeword-count conditions that an embedding must satisfy.

use embedrank::embedding::{
    quasi_residual_params, thm5_necessary, thm5_necessary_with, thm_taf_necessary,
};
use embedrank::geometry::ag_design;
use embedrank::iso::automorphism_group;

fn main() -> embedrank::Result<()> {
    let ag = ag_design(3, 4, 2)?.0;
    let c = thm5_necessary(&ag, 0)?;
    println!(
        "good block 0: need {} weight-32 unions, found {}",
        c.required, c.found
    );

    // the same count for one resolution from each orbit
    let dprime = ag.good_block(0)?.expect("good").dprime;
    let rs = dprime.resolutions(None)?;
    for orbit in automorphism_group(&dprime).resolution_orbits(&rs) {
        let c = thm5_necessary_with(&ag, 0, Some(&rs[orbit[0]]))?;
        println!(
            "  orbit of {:>2} resolutions: found {:>3}, passes {}",
            orbit.len(),
            c.found,
            c.passes
        );
    }

    let t = thm_taf_necessary(&ag, 2)?;
    println!("row code unions: need {}, found {}", t.required, t.found);
    println!(
        "symmetric parameters for 2-(64,16,5): {:?}",
        quasi_residual_params(64, 16, 5)
    );
    Ok(())
}
