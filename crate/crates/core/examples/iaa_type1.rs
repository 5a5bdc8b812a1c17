//! Build an IAA type-1 set from three interval answers and inspect it.

use iaa_moderation::fuzzy::{build_iaa, centroid_t1, Interval, RatingScale};

fn main() -> iaa_moderation::Result<()> {
    let scale = RatingScale::default();
    let answers = [(1.0, 2.0), (1.0, 3.0), (2.0, 4.0)]
        .iter()
        .map(|&(lo, hi)| Interval::new(lo, hi, &scale))
        .collect::<Result<Vec<_>, _>>()?;
    let set = build_iaa(&answers, scale)?;

    for (lo, hi, grade) in set.function().cells() {
        println!("({lo}, {hi})  {grade:.4}");
    }
    for (x, grade) in set.function().point_overrides() {
        println!("at {x}      {grade:.4}");
    }
    for x in [1.0, 2.0, 2.5, 3.5, 6.0] {
        println!(
            "mu({x}) = {:.4}  covered by {}",
            set.membership(x)?,
            set.coverage_count(x)
        );
    }
    println!("centroid {:.4}", centroid_t1(set.function())?.value());
    Ok(())
}
