//! The Γ-module of BGG operators at a point: action matrix, basis duality
//! with invariant preimages, and the cyclic and kernel tests.

use std::sync::Arc;

use gt_core::bggmod::{action_matrix, cyclicity_check, invariant_preimage, kernel_check, GammaVector, SubsystemFrame};
use gt_core::coxeter::{CoxeterGroup, RootSystem};
use gt_core::polyring::{parse_poly, Point, Shape};
use gt_core::rational;

fn main() -> gt_core::Result<()> {
    let shape = Shape::new(&[4]);
    let ambient = Arc::new(CoxeterGroup::new(RootSystem::type_a(&shape))?);
    // W is the S_3 on the first three variables; v has a repeated coordinate.
    let frame = SubsystemFrame::new(ambient, &[0, 1])?;
    let v = Point::from_ints(&shape, &[2, 2, 0, 5])?;
    let gamma = parse_poly("x[1,1]^2 + x[1,2]^2 + x[1,3]^2 + x[1,4]^2", &shape)?;
    let m = action_matrix(&frame, &gamma, &v)?;
    let names: Vec<String> = m.basis.iter().map(|&w| frame.group().word_string(w)).collect();
    println!("basis {names:?}, eigenvalue {}", rational::to_string(&m.eigenvalue));
    println!("{}", m.matrix);
    for &sigma in &m.basis {
        let pre = invariant_preimage(&frame, sigma, &v)?;
        let image: Vec<String> =
            m.basis.iter().map(|&tau| rational::to_string(&frame.calculus().d_at(tau, &v, &pre))).collect();
        println!("preimage of {:<6} evaluates to {image:?}", frame.group().word_string(sigma));
    }
    let top = GammaVector::basis_vector(&frame, &v, m.basis[0])?;
    let bottom = GammaVector::basis_vector(&frame, &v, *m.basis.last().expect("nonempty basis"))?;
    println!("top cyclic: {}, bottom in kernel: {}", cyclicity_check(&frame, &top)?, kernel_check(&frame, &bottom));
    Ok(())
}
