//! Designs of points and flats in affine and projective spaces.

use embedrank::geometry::{ag_design, pg_design};

fn main() -> embedrank::Result<()> {
    let (ag, resolution) = ag_design(3, 4, 2)?;
    let p = ag.verify_tdesign(2).expect("a 2-design");
    println!(
        "{}: 2-({}, {}, {}), r = {}, b = {}",
        ag.name().unwrap_or("?"),
        p.v,
        p.k,
        p.lambda,
        p.r,
        p.b
    );
    println!(
        "  {} parallel classes of {} planes",
        resolution.len(),
        resolution.class_size()
    );

    for (n, q, d) in [(2, 2, 1), (2, 3, 1), (3, 2, 2), (3, 4, 2)] {
        let pg = pg_design(n, q, d)?;
        let p = pg.verify_tdesign(2).expect("a 2-design");
        println!(
            "{}: 2-({}, {}, {}), symmetric {}",
            pg.name().unwrap_or("?"),
            p.v,
            p.k,
            p.lambda,
            p.symmetric
        );
    }
    Ok(())
}
