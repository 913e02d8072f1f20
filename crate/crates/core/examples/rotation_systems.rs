//! Rotation systems, link complexes and the planar rotation system search.

use embed3::fixtures;
use embed3::rotation::{total_space, AllRotations};
use embed3::search::{search_planar_rotation_system, Mode, SearchOptions};
use embed3::trace::{is_planar_rotation_system, link_complexes};

fn main() {
    let book = fixtures::book3();
    println!("book3: {} rotation systems", total_space(&book));
    for sigma in AllRotations::new(&book) {
        let chis: Vec<i64> = link_complexes(&book, &sigma)
            .iter()
            .map(|l| l.euler_characteristic())
            .collect();
        println!(
            "  link χ {chis:?}, planar {}",
            is_planar_rotation_system(&book, &sigma).0
        );
    }

    for (name, c) in fixtures::all() {
        let opts = SearchOptions {
            mode: Mode::Count,
            ..SearchOptions::default()
        };
        let r = search_planar_rotation_system(&c, opts).unwrap();
        println!(
            "{name}: {:?} count {:?} examined {} of {}",
            r.status, r.count, r.candidates_examined, r.total_space
        );
    }
}
