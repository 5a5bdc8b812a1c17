//! Stack two profession groups into a zSlice type-2 set.

use iaa_moderation::fuzzy::{aggregate_zgt2, build_iaa, centroid_zgt2, Interval, RatingScale};

fn group(
    scale: RatingScale,
    raw: &[(f64, f64)],
) -> iaa_moderation::Result<iaa_moderation::fuzzy::AgreementT1> {
    let intervals = raw
        .iter()
        .map(|&(lo, hi)| Interval::new(lo, hi, &scale))
        .collect::<Result<Vec<_>, _>>()?;
    build_iaa(&intervals, scale)
}

fn main() -> iaa_moderation::Result<()> {
    let scale = RatingScale::default();
    let z = aggregate_zgt2(vec![
        (
            "engineers".into(),
            group(scale, &[(1.0, 2.0), (1.0, 3.0), (2.0, 4.0)])?,
        ),
        (
            "managers".into(),
            group(scale, &[(1.0, 5.0), (1.5, 4.0), (1.0, 6.0)])?,
        ),
    ])?;

    println!("z-levels {:?}", z.z_levels());
    for j in 1..=z.group_count() {
        let slice = z.zslice(j)?;
        println!("slice {j}: {:?}", slice.cells().collect::<Vec<_>>());
    }
    for (x, y) in [(2.0, 0.9), (3.5, 0.5), (5.5, 0.3)] {
        println!("secondary({x}, {y}) = {}", z.secondary_grade(x, y)?);
    }
    println!("centroid {:.4}", centroid_zgt2(&z)?.value());
    Ok(())
}
