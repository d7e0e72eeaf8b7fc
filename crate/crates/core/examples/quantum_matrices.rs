//! Twist M_q(2) by `b ↦ λb, c ↦ λ⁻¹c` and check the cobraided axioms.
use homq::catalog::matrices::{self, MatrixKind};
use homq::cobraid::{verify_cobraided, verify_oqhybe};

fn main() {
    let f = matrices::matrix_field();
    let lambda = f.var("lambda").unwrap();
    let c = matrices::twisted(MatrixKind::Mq2, &f, &lambda, 4).unwrap();
    let h = c.h();
    let p = h.pres();

    let det = matrices::quantum_determinant(p);
    println!("det_q = {}", p.render_poly(&det));
    println!("Δ(b) = {}", h.render_tensor(&h.delta(&p.gen("b"))));
    for (x, y) in [("a", "a"), ("b", "c"), ("c", "b"), ("ad", "d")] {
        println!("R({x}, {y}) = {}", c.eval_text(x, y).unwrap());
    }

    let rep = verify_cobraided(&c, 2).unwrap();
    println!("{}", rep.summary());
    println!("{}", verify_oqhybe(&c, 2).unwrap().summary());
}
