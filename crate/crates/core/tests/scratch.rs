use maclab_core::characters::char_eval;
use maclab_core::conjectures::{gj_c, gj_h, to_alpha_gamma};
use maclab_core::macdonald::macdonald_j;
use maclab_core::partitions::Partition;
use maclab_core::scalars::{one_minus_qt, MultiPoly, RatFun, Var};

#[test]
fn spot_values() {
    let one_box = Partition::new(vec![1]);
    println!("c = {}", gj_c(&one_box, &one_box, &one_box));
    println!("h = {}", gj_h(&one_box, &one_box, &one_box));
    println!("theta = {}", char_eval(&one_box, &one_box));
    let j1 = macdonald_j(&one_box).with_degree(2);
    let j2 = macdonald_j(&Partition::new(vec![2]));
    let prod = &j1 * &j1;
    let pairing = prod.qt_scalar(&j2);
    let scale = RatFun::from_poly(one_minus_qt(0, 1).pow(4));
    println!("stanley = {}", to_alpha_gamma(&(&pairing / &scale)));
    let minus_one_q = &RatFun::from_int(-1)
        * &RatFun::from_poly(&MultiPoly::one() - &MultiPoly::var(Var::q()));
    println!("-(1-q) = {}", minus_one_q);
}
