//! Tables of every model word with six and seven crossings: alternating
//! word, viable and non-viable vertical crossings, and knot type. The
//! seven-crossing rows are not in enumeration order.

use bridge_census::{analyze, normalize_to_model, to_alternating, BilliardWord, Normalized};

pub struct Row {
    pub word: &'static str,
    pub alternating: &'static str,
    pub viable: &'static [usize],
    pub non_viable: &'static [usize],
    pub name: &'static str,
}

const fn row(
    word: &'static str,
    alternating: &'static str,
    viable: &'static [usize],
    non_viable: &'static [usize],
    name: &'static str,
) -> Row {
    Row {
        word,
        alternating,
        viable,
        non_viable,
        name,
    }
}

pub const SIX: [Row; 5] = [
    row("+--+-+-", "s1^3 s2^-1 s1 s2^-1", &[5], &[4], "6_2"),
    row("+-++-+-", "s1 s2^-3 s1 s2^-1", &[2, 3, 5], &[4], "6_1"),
    row("+-+--+-", "s1 s2^-1 s1^3 s2^-1", &[3, 4, 5], &[2], "6_1"),
    row("+-+-++-", "s1 s2^-1 s1 s2^-3", &[3], &[2], "6_2"),
    row("+--++--++-", "s1^2 s2^-1 s1 s2^-2", &[4], &[3], "6_3"),
];

pub const SEVEN: [Row; 11] = [
    row(
        "+-+-+-+",
        "s1 s2^-1 s1 s2^-1 s1 s2^-1 s1",
        &[3, 6],
        &[2, 5],
        "7_7",
    ),
    row(
        "+-+--++--+",
        "s1 s2^-1 s1^2 s2^-1 s1^2",
        &[3, 5],
        &[2, 4],
        "7_6",
    ),
    row("+-++-++--+", "s1 s2^-4 s1^2", &[2, 3, 4, 5], &[], "7_2"),
    row("+-++--+--+", "s1 s2^-2 s1^4", &[2, 3], &[], "7_3"),
    row(
        "+-++--++-+",
        "s1 s2^-2 s1 s2^-2 s1",
        &[2, 3, 5, 6],
        &[],
        "7_4",
    ),
    row("+--+-++--+", "s1^3 s2^-2 s1^2", &[4, 5], &[], "7_5"),
    row("+--+--+--+", "s1^7", &[], &[], "7_1"),
    row("+--+--++-+", "s1^4 s2^-2 s1", &[5, 6], &[], "7_3"),
    row("+--++-+--+", "s1^2 s2^-2 s1^3", &[3, 4], &[], "7_5"),
    row("+--++-++-+", "s1^2 s2^-4 s1", &[3, 4, 5, 6], &[], "7_2"),
    row(
        "+--++--+-+",
        "s1^2 s2^-1 s1^2 s2^-1 s1",
        &[4, 6],
        &[3, 5],
        "7_6",
    ),
];

pub fn check_row(r: &Row) {
    let w: BilliardWord = r.word.parse().unwrap();
    assert!(w.is_reduced(), "{}", r.word);
    let Normalized::ModelWord(runs) = normalize_to_model(&w) else {
        panic!("{} is not a model word", r.word);
    };
    assert_eq!(runs.to_word(), w);
    let d = to_alternating(&runs).unwrap();
    let viable: Vec<usize> = d
        .crossings()
        .iter()
        .filter(|x| x.viable)
        .map(|x| x.index)
        .collect();
    let gray: Vec<usize> = d
        .crossings()
        .iter()
        .filter(|x| x.is_vertical() && !x.viable)
        .map(|x| x.index)
        .collect();
    assert_eq!(viable, r.viable, "{}: viable crossings", r.word);
    assert_eq!(gray, r.non_viable, "{}: non-viable crossings", r.word);

    let a = analyze(&runs).unwrap();
    assert_eq!(a.alternating, r.alternating, "{}", r.word);
    assert_eq!(a.name, r.name, "{}", r.word);
    assert_eq!(a.s, 2 + r.viable.len(), "{}", r.word);
    assert_eq!(a.viable_crossings, r.viable);
}
