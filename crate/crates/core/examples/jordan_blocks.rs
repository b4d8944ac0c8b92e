//! Jordan profiles of invariants on the Γ-module and the maximal-block witness.

use std::sync::Arc;

use gt_core::bggmod::{jordan_profile, max_block_witness, top_power_value, SubsystemFrame};
use gt_core::coxeter::{CoxeterGroup, RootSystem};
use gt_core::polyring::{parse_poly, Point, Shape};
use gt_core::rational;

fn main() -> gt_core::Result<()> {
    let shape = Shape::new(&[3]);
    let frame = SubsystemFrame::full(Arc::new(CoxeterGroup::new(RootSystem::type_a(&shape))?))?;
    let v = Point::from_ints(&shape, &[3, 1, 0])?;
    for src in ["x[1,1] + x[1,2] + x[1,3]", "x[1,1]^2 + x[1,2]^2 + x[1,3]^2", "x[1,1]*x[1,2]*x[1,3]"] {
        let gamma = parse_poly(src, &shape)?;
        let p = jordan_profile(&frame, &gamma, &v)?;
        println!("{src:<32} blocks {:?} (bound {})", p.blocks, p.bound);
    }
    let witness = max_block_witness(&frame, &v)?;
    println!("witness blocks {:?}", jordan_profile(&frame, &witness, &v)?.blocks);
    let e1 = parse_poly("x[1,1] + x[1,2] + x[1,3]", &shape)?;
    println!("top power value for e1: {}", rational::to_string(&top_power_value(&frame, &e1, &v)?));
    Ok(())
}
