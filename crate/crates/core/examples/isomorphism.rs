//! Canonical certificates, isomorphism tests, automorphism groups and orbits.

use embedrank::geometry::{ag_design, pg_design};
use embedrank::iso::{are_isomorphic, automorphism_group, canonical_cert};

fn main() -> embedrank::Result<()> {
    let fano = pg_design(2, 2, 1)?;
    let relabeled = fano.relabel_points(&[3, 6, 0, 5, 1, 4, 2])?;
    println!("Fano certificate {}", canonical_cert(&fano).digest);
    println!(
        "relabeled copy isomorphic: {}",
        are_isomorphic(&fano, &relabeled)
    );
    println!("|Aut(Fano)| = {}", automorphism_group(&fano).order());

    let ag = ag_design(3, 4, 2)?.0;
    let g = automorphism_group(&ag);
    println!(
        "|Aut(AG_2(3,4))| = {}, {} block orbit(s)",
        g.order(),
        g.block_orbits().len()
    );

    let dprime = ag.good_block(0)?.expect("good").dprime;
    let h = automorphism_group(&dprime);
    let rs = dprime.resolutions(None)?;
    let sizes: Vec<usize> = h.resolution_orbits(&rs).iter().map(Vec::len).collect();
    println!(
        "group of the size-12 blocks: order {}, orbits on {} resolutions {:?}",
        h.order(),
        rs.len(),
        sizes
    );
    Ok(())
}
