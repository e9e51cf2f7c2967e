//! Residual and derived designs, good blocks and normal blocks.

use embedrank::geometry::{ag_design, pg_design};

fn main() -> embedrank::Result<()> {
    let ag = ag_design(3, 4, 2)?.0;
    let res = ag.residual(0, false)?;
    let der = ag.derived(0, false)?;
    println!(
        "residual of AG_2(3,4): {} points, block sizes {:?}",
        res.v(),
        res.block_sizes()
    );
    println!(
        "derived: {} points, block sizes {:?}",
        der.v(),
        der.block_sizes()
    );

    let good = ag.good_block(0)?.expect("every block of AG_2(3,4) is good");
    let s = good.s.verify_tdesign(2).expect("S is a 2-design");
    println!(
        "derived design = 4 copies of 2-({}, {}, {}) plus the empty intersections",
        s.v, s.k, s.lambda
    );
    println!(
        "residual blocks of size 12: {}, resolution into {} classes",
        good.dprime.b(),
        good.resolution.len()
    );

    let pg = pg_design(3, 4, 2)?;
    let normal = pg
        .normal_block(0, 4)?
        .expect("planes of PG(3,4) are normal");
    let d0 = normal.d0.verify_tdesign(2).expect("2-design");
    println!(
        "PG_2(3,4) block 0 is normal: derived copies of 2-({}, {}, {})",
        d0.v, d0.k, d0.lambda
    );
    Ok(())
}
