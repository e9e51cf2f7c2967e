//! Affine resolvability, parallel classes and all resolutions.

use embedrank::geometry::ag_design;

fn main() -> embedrank::Result<()> {
    let ag = ag_design(3, 4, 2)?.0;
    let ar = ag
        .is_affine_resolvable()
        .expect("AG_2(3,4) is affine resolvable");
    println!(
        "AG_2(3,4): q = {}, mu = {}, {} classes",
        ar.q,
        ar.mu,
        ar.resolution.len()
    );

    let dprime = ag.good_block(0)?.expect("good").dprime;
    let classes = dprime.parallel_classes()?;
    let rs = dprime.resolutions(None)?;
    println!(
        "residual blocks of size 12: {} parallel classes, {} resolutions",
        classes.len(),
        rs.len()
    );
    println!(
        "first resolution, first classes: {:?}",
        &rs[0].classes()[..3]
    );
    Ok(())
}
