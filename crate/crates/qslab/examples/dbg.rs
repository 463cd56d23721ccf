use std::time::Instant;
use qslab::moments::{moment_sequence, MomentKind, MomentOptions};
use qslab::pgf::{Family, PgfEngine, VariantId};

fn main() {
    for fam in [Family::SwapV2, Family::SwapV4, Family::SwapV5] {
        let eng = PgfEngine::new();
        let t0 = Instant::now();
        let opts = MomentOptions::truncated().with_min_order(4);
        let seq = moment_sequence(&eng, VariantId::new(fam), 1, MomentKind::Mean, 90, &opts);
        println!("{fam:?} series ladder to 90 (R=4): {:?}, last = {}", t0.elapsed(), seq.values.last().unwrap());
    }
    // full-pgf ladders to n=25 for the invariants, and n=40 three-pivot means
    let eng = PgfEngine::new();
    let t0 = Instant::now();
    for fam in [Family::Comp1Pivot, Family::SwapV1, Family::SwapV2, Family::SwapV3, Family::SwapV4, Family::SwapV5, Family::CompDual, Family::SwapDual, Family::CompThreePivot] {
        let _ = eng.pgf(VariantId::new(fam), 25);
    }
    println!("all full ladders to 25: {:?}", t0.elapsed());
    let t0 = Instant::now();
    let _ = eng.pgf(VariantId::with_pivots(Family::CompKPivotLinear, 3), 20);
    let _ = eng.pgf(VariantId::with_pivots(Family::CompKPivotLinear, 4), 20);
    println!("kpivot k=3,4 full ladders to 20: {:?}", t0.elapsed());
}
