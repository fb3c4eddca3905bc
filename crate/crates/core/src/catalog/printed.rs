//! The explicit order-8 grids, transcribed literally. Known misprints are
//! repaired by the correction table in the parent module so this stays a faithful copy.
//!
//! Token grammar:
//! * `k` is the basis vector `|k>`.
//! * `a_n` is the subscripted vector `|a_n>`.
//! * `a^i@n` is the superscripted vector `|a^i>` as defined for case `n`.
//! * `s(a-b)` is `(|a> - |b>) / sqrt 2`; `h(a+b-c+d)` is `(...) / 2`.

pub(super) struct PrintedCase {
    pub case_id: usize,
    pub cardinality: usize,
    pub rows: [&'static str; 8],
}

pub(super) const PRINTED: [PrintedCase; 29] = [
    PrintedCase {
        case_id: 1,
        cardinality: 17,
        rows: [
            "0 1 2 3 4 5 6 7",
            "1 0 3 2 5 4 7 6",
            "2 3 0 1 6 7 4 5",
            "3 2 1 0 7 6 5 4",
            "4 5 6_1 7_1 0_4 1_4 2_4 3",
            "5 4 7_1 6_1 1_4 0_4 3 2_4",
            "6_2 7_2 4_3 5_3 2_4 3 0_4 1_4",
            "7_2 6_2 5_3 4_3 3 2_4 1_4 0_4",
        ],
    },
    PrintedCase {
        case_id: 2,
        cardinality: 19,
        rows: [
            "0 1 2 3 4 5 6 7",
            "1 0 3 2 5 4 7 6",
            "2 3 0 1 6 7 4 5",
            "3 2 1 0 7 6 5 4",
            "4_5 5_5 6_1 7_1 0_4 1_4 2_4 3",
            "5_5 4_5 7_1 6_1 1_4 0_4 3 2_4",
            "6_2 7_2 4_3 5_3 2_4 3 0_4 1_4",
            "7_2 6_2 5_3 4_3 3 2_4 1_4 0_4",
        ],
    },
    PrintedCase {
        case_id: 3,
        cardinality: 21,
        rows: [
            "0 1 2 3 4 5 6 7",
            "1 0 3 2 5 4 7 6",
            "2 3 0 1 6_6 7_6 4 5",
            "3 2 1 0 7_6 6_6 5 4",
            "4_5 5_5 6_1 7_1 0_4 1_4 2_4 3",
            "5_5 4_5 7_1 6_1 1_4 0_4 3 2_4",
            "6_2 7_2 4_3 5_3 2_4 3 0_4 1_4",
            "7_2 6_2 5_3 4_3 3 2_4 1_4 0_4",
        ],
    },
    PrintedCase {
        case_id: 4,
        cardinality: 23,
        rows: [
            "0 1 2 3 4 5 6 7",
            "1 0 3 2 5 4 7 6",
            "2 3 0 1 6_6 7_6 4_7 5_7",
            "3 2 1 0 7_6 6_6 5_7 4_7",
            "4_5 5_5 6_1 7_1 0_4 1_4 2_4 3",
            "5_5 4_5 7_1 6_1 1_4 0_4 3 2_4",
            "6_2 7_2 4_3 5_3 2_4 3 0_4 1_4",
            "7_2 6_2 5_3 4_3 3 2_4 1_4 0_4",
        ],
    },
    PrintedCase {
        case_id: 5,
        cardinality: 25,
        rows: [
            "0 1 2 3 4 5 6 7",
            "1 0 3 2 5 4 7 6",
            "2_8 3_8 0 1 6_6 7_6 4_7 5_7",
            "3_8 2_8 1 0 7_6 6_6 5_7 4_7",
            "4_5 5_5 6_1 7_1 0_4 1_4 2_4 3",
            "5_5 4_5 7_1 6_1 1_4 0_4 3 2_4",
            "6_2 7_2 4_3 5_3 2_4 3 0_4 1_4",
            "7_2 6_2 5_3 4_3 3 2_4 1_4 0_4",
        ],
    },
    PrintedCase {
        case_id: 6,
        cardinality: 27,
        rows: [
            "0 1 2 3 4 5 6 7",
            "1 0 3 2 5 4 7 6",
            "2_8 3_8 0_9 1_9 6_6 7_6 4_7 5_7",
            "3_8 2_8 1_9 0_9 7_6 6_6 5_7 4_7",
            "4_5 5_5 6_1 7_1 0_4 1_4 2_4 3",
            "5_5 4_5 7_1 6_1 1_4 0_4 3 2_4",
            "6_2 7_2 4_3 5_3 2_4 3 0_4 1_4",
            "7_2 6_2 5_3 4_3 3 2_4 1_4 0_4",
        ],
    },
    PrintedCase {
        case_id: 7,
        cardinality: 29,
        rows: [
            "0 1 2 3 4 5 6 7",
            "1 0 3 2 5 4 7 6",
            "2_8 3_8 0 1 6 7 4 5",
            "3_8 2_8 1 0 7 6 5 4",
            "4^0@7 5^0@7 6^0@7 7^0@7 0_4 1_4 2_4 3",
            "5^1@7 4^1@7 7^1@7 6^1@7 1_4 0_4 3 2_4",
            "6^2@7 7^2@7 4^2@7 5^2@7 2_4 3 0_4 1_4",
            "7^3@7 6^3@7 5^3@7 4^3@7 3 2_4 1_4 0_4",
        ],
    },
    PrintedCase {
        case_id: 8,
        cardinality: 31,
        rows: [
            "0 1 2 3 4 5 6 7",
            "1 0 3 2 5 4 7 6",
            "2_8 3_8 0_9 1_9 6 7 4 5",
            "3_8 2_8 1_9 0_9 7 6 5 4",
            "4^0@7 5^0@7 6^0@7 7^0@7 0_4 1_4 2_4 3",
            "5^1@7 4^1@7 7^1@7 6^1@7 1_4 0_4 3 2_4",
            "6^2@7 7^2@7 4^2@7 5^2@7 2_4 3 0_4 1_4",
            "7^3@7 6^3@7 5^3@7 4^3@7 3 2_4 1_4 0_4",
        ],
    },
    PrintedCase {
        case_id: 9,
        cardinality: 33,
        rows: [
            "0 1 2 3 4 5 6 7",
            "1 0 3 2 5 4 7 6",
            "2_8 3_8 0_9 1_9 6_6 7_6 4 5",
            "3_8 2_8 1_9 0_9 7_6 6_6 5 4",
            "4^0@7 5^0@7 6^0@7 7^0@7 0_4 1_4 2_4 3",
            "5^1@7 4^1@7 7^1@7 6^1@7 1_4 0_4 3 2_4",
            "6^2@7 7^2@7 4^2@7 5^2@7 2_4 3 0_4 1_4",
            "7^3@7 6^3@7 5^3@7 4^3@7 3 2_4 1_4 0_4",
        ],
    },
    PrintedCase {
        case_id: 10,
        cardinality: 34,
        rows: [
            "0 1 2 3 4 5 6 7",
            "1 0 3 2 5 4 7 6",
            "2_8 3_8 0_9 1_9 6_6 7_6 4 5",
            "3_8 2_8 1_9 0_9 7_6 6_6 5 4",
            "4^0@7 5^0@7 6^0@7 7^0@7 0_10 1_10 2_10 3_10",
            "5^1@7 4^1@7 7^1@7 6^1@7 1_10 0_10 3_10 2_10",
            "6^2@7 7^2@7 4^2@7 5^2@7 2_10 3_10 0_10 1_10",
            "7^3@7 6^3@7 5^3@7 4^3@7 3_10 2_10 1_10 0_10",
        ],
    },
    PrintedCase {
        case_id: 11,
        cardinality: 35,
        rows: [
            "0 1 2 3 4 5 6 7",
            "1 0 3 2 5 4 7 6",
            "2_8 3_8 0_9 1_9 6_6 7_6 4_7 5_7",
            "3_8 2_8 1_9 0_9 7_6 6_6 5_7 4_7",
            "4^0@7 5^0@7 6^0@7 7^0@7 0_4 1_4 2_4 3",
            "5^1@7 4^1@7 7^1@7 6^1@7 1_4 0_4 3 2_4",
            "6^2@7 7^2@7 4^2@7 5^2@7 2_4 3 0_4 1_4",
            "7^3@7 6^3@7 5^3@7 4^3@7 3 2_4 1_4 0_4",
        ],
    },
    PrintedCase {
        case_id: 12,
        cardinality: 36,
        rows: [
            "0 1 2 3 4 5 6 7",
            "1 0 3 2 5 4 7 6",
            "2_8 3_8 0_9 1_9 6_6 7_6 4_7 5_7",
            "3_8 2_8 1_9 0_9 7_6 6_6 5_7 4_7",
            "4^0@7 5^0@7 6^0@7 7^0@7 0_10 1_10 2_10 3_10",
            "5^1@7 4^1@7 7^1@7 6^1@7 1_10 0_10 3_10 2_10",
            "6^2@7 7^2@7 4^2@7 5^2@7 2_10 3_10 0_10 1_10",
            "7^3@7 6^3@7 5^3@7 4^3@7 3_10 2_10 1_10 0_10",
        ],
    },
    PrintedCase {
        case_id: 13,
        cardinality: 37,
        rows: [
            "0 1 s(2-3) s(2+3) 4 5 6 7",
            "2 3 s(0-1) s(0+1) 5 4 7 6",
            "s(1+3) s(0-2) h(0+1+2-3) h(0-1+2+3) 6_6 7_6 4 5",
            "s(1-3) s(0+2) h(0+1-2+3) h(0-1-2-3) 7_6 6_6 5 4",
            "4 5 s(6-7) s(6+7) 0_4 1_4 2_4 3",
            "6 7 s(0-1) s(4+5) 1_4 0_4 3 2_4",
            "s(5+7) s(4-6) h(4+5+6-7) h(4-5+6+7) 2_4 3 0_4 1_4",
            "s(5-7) s(4+6) h(4+5-6+7) h(4-5-6-7) 3 2_4 1_4 0_4",
        ],
    },
    PrintedCase {
        case_id: 14,
        cardinality: 38,
        rows: [
            "0 1 s(2-3) s(2+3) 4 5 6 7",
            "2 3 s(0-1) s(0+1) 5 4 7 6",
            "s(1+3) s(0-2) h(0+1+2-3) h(0-1+2+3) 6_6 7_6 4 5",
            "s(1-3) s(0+2) h(0+1-2+3) h(0-1-2-3) 7_6 6_6 5 4",
            "4 5 s(6-7) s(6+7) 0_10 1_10 2_10 3_10",
            "6 7 s(0-1) s(4+5) 1_10 0_10 3_10 2_10",
            "s(5+7) s(4-6) h(4+5+6-7) h(4-5+6+7) 2_10 3_10 0_10 1_10",
            "s(5-7) s(4+6) h(4+5-6+7) h(4-5-6-7) 3_10 2_10 1_10 0_10",
        ],
    },
    PrintedCase {
        case_id: 15,
        cardinality: 39,
        rows: [
            "0 1 s(2-3) s(2+3) 4 5 6 7",
            "2 3 s(0-1) s(0+1) 5 4 7 6",
            "s(1+3) s(0-2) h(0+1+2-3) h(0-1+2+3) 6_6 7_6 4_7 5_7",
            "s(1-3) s(0+2) h(0+1-2+3) h(0-1-2-3) 7_6 6_6 5_7 4_7",
            "4 5 s(6-7) s(6+7) 0_4 1_4 2_4 3",
            "6 7 s(0-1) s(4+5) 1_4 0_4 3 2_4",
            "s(5+7) s(4-6) h(4+5+6-7) h(4-5+6+7) 2_4 3 0_4 1_4",
            "s(5-7) s(4+6) h(4+5-6+7) h(4-5-6-7) 3 2_4 1_4 0_4",
        ],
    },
    PrintedCase {
        case_id: 16,
        cardinality: 40,
        rows: [
            "0 1 s(2-3) s(2+3) 4 5 6 7",
            "2 3 s(0-1) s(0+1) 5 4 7 6",
            "s(1+3) s(0-2) h(0+1+2-3) h(0-1+2+3) 6_6 7_6 4_7 5_7",
            "s(1-3) s(0+2) h(0+1-2+3) h(0-1-2-3) 7_6 6_6 5_7 4_7",
            "4 5 s(6-7) s(6+7) 0_10 1_10 2_10 3_10",
            "6 7 s(0-1) s(4+5) 1_10 0_10 3_10 2_10",
            "s(5+7) s(4-6) h(4+5+6-7) h(4-5+6+7) 2_10 3_10 0_10 1_10",
            "s(5-7) s(4+6) h(4+5-6+7) h(4-5-6-7) 3_10 2_10 1_10 0_10",
        ],
    },
    PrintedCase {
        case_id: 17,
        cardinality: 41,
        rows: [
            "0 1 s(2-3) s(2+3) 4 5 6 7",
            "2 3 s(0-1) s(0+1) 5 4 7 6",
            "s(1+3) s(0-2) h(0+1+2-3) h(0-1+2+3) 6_6 7_6 4 5",
            "s(1-3) s(0+2) h(0+1-2+3) h(0-1-2-3) 7_6 6_6 5 4",
            "4^0@7 5^0@7 6^0@7 7^0@7 0_4 1_4 2_4 3",
            "5^1@7 4^1@7 7^1@7 6^1@7 1_4 0_4 3 2_4",
            "6^2@7 7^2@7 4^2@7 5^2@7 2_4 3 0_4 1_4",
            "7^3@7 6^3@7 5^3@7 4^3@7 3 2_4 1_4 0_4",
        ],
    },
    PrintedCase {
        case_id: 18,
        cardinality: 42,
        rows: [
            "0 1 s(2-3) s(2+3) 4 5 6 7",
            "2 3 s(0-1) s(0+1) 5 4 7 6",
            "s(1+3) s(0-2) h(0+1+2-3) h(0-1+2+3) 6_6 7_6 4 5",
            "s(1-3) s(0+2) h(0+1-2+3) h(0-1-2-3) 7_6 6_6 5 4",
            "4^0@7 5^0@7 6^0@7 7^0@7 0_10 1_10 2_10 3_10",
            "5^1@7 4^1@7 7^1@7 6^1@7 1_10 0_10 3_10 2_10",
            "6^2@7 7^2@7 4^2@7 5^2@7 2_10 3_10 0_10 1_10",
            "7^3@7 6^3@7 5^3@7 4^3@7 3_10 2_10 1_10 0_10",
        ],
    },
    PrintedCase {
        case_id: 19,
        cardinality: 43,
        rows: [
            "0 1 s(2-3) s(2+3) 4 5 6 7",
            "2 3 s(0-1) s(0+1) 5 4 7 6",
            "s(1+3) s(0-2) h(0+1+2-3) h(0-1+2+3) 6_6 7_6 4_7 5_7",
            "s(1-3) s(0+2) h(0+1-2+3) h(0-1-2-3) 7_6 6_6 5_7 4_7",
            "4^0@7 5^0@7 6^0@7 7^0@7 0_4 1_4 2_4 3",
            "5^1@7 4^1@7 7^1@7 6^1@7 1_4 0_4 3 2_4",
            "6^2@7 7^2@7 4^2@7 5^2@7 2_4 3 0_4 1_4",
            "7^3@7 6^3@7 5^3@7 4^3@7 3 2_4 1_4 0_4",
        ],
    },
    PrintedCase {
        case_id: 20,
        cardinality: 44,
        rows: [
            "0 1 s(2-3) s(2+3) 4 5 6 7",
            "2 3 s(0-1) s(0+1) 5 4 7 6",
            "s(1+3) s(0-2) h(0+1+2-3) h(0-1+2+3) 6_6 7_6 4_7 5_7",
            "s(1-3) s(0+2) h(0+1-2+3) h(0-1-2-3) 7_6 6_6 5_7 4_7",
            "4^0@7 5^0@7 6^0@7 7^0@7 0_10 1_10 2_10 3_10",
            "5^1@7 4^1@7 7^1@7 6^1@7 1_10 0_10 3_10 2_10",
            "6^2@7 7^2@7 4^2@7 5^2@7 2_10 3_10 0_10 1_10",
            "7^3@7 6^3@7 5^3@7 4^3@7 3_10 2_10 1_10 0_10",
        ],
    },
    PrintedCase {
        case_id: 21,
        cardinality: 46,
        rows: [
            "0 1 2 3 4 5 6 7",
            "1 0 3 2 5 4 7 6",
            "2_8 3_8 0_9 1_9 6_6 7_6 4 5",
            "3_8 2_8 1_9 0_9 7_6 6_6 5 4",
            "4^0@7 5^0@7 6^0@7 7^0@7 0^0@21 1^0@21 2^0@21 3^0@21",
            "5^1@7 4^1@7 7^1@7 6^1@7 1^1@21 0^1@21 3^1@21 2^1@21",
            "6^2@7 7^2@7 4^2@7 5^2@7 2^2@21 3^2@21 0^2@21 1^2@21",
            "7^3@7 6^3@7 5^3@7 4^3@7 3^3@21 2^3@21 1^3@21 0^3@21",
        ],
    },
    PrintedCase {
        case_id: 22,
        cardinality: 47,
        rows: [
            "0 1 s(2-3) s(2+3) 4^0@22 5^0@22 6^0@22 7^0@22",
            "2 3 s(0-1) s(0+1) 5^1@22 4^1@22 7^1@22 6^1@22",
            "s(1+3) s(0-2) h(0+1+2-3) h(0-1+2+3) 6^2@22 7^2@22 4^2@22 5^2@22",
            "s(1-3) s(0+2) h(0+1-2+3) h(0-1-2-3) 7^3@22 6^3@22 5^3@22 4^3@22",
            "4 5 s(6-7) s(6+7) 0_4 1_4 2_4 3",
            "6 7 s(0-1) s(4+5) 1_4 0_4 3 2_4",
            "s(5+7) s(4-6) h(4+5+6-7) h(4-5+6+7) 2_4 3 0_4 1_4",
            "s(5-7) s(4+6) h(4+5-6+7) h(4-5-6-7) 3 2_4 1_4 0_4",
        ],
    },
    PrintedCase {
        case_id: 23,
        cardinality: 48,
        rows: [
            "0 1 2 3 4 5 6 7",
            "1 0 3 2 5 4 7 6",
            "2_8 3_8 0_9 1_9 6_6 7_6 4_7 5_7",
            "3_8 2_8 1_9 0_9 7_6 6_6 5_7 4_7",
            "4^0@7 5^0@7 6^0@7 7^0@7 0^0@21 1^0@21 2^0@21 3^0@21",
            "5^1@7 4^1@7 7^1@7 6^1@7 1^1@21 0^1@21 3^1@21 2^1@21",
            "6^2@7 7^2@7 4^2@7 5^2@7 2^2@21 3^2@21 0^2@21 1^2@21",
            "7^3@7 6^3@7 5^3@7 4^3@7 3^3@21 2^3@21 1^3@21 0^3@21",
        ],
    },
    PrintedCase {
        case_id: 24,
        cardinality: 50,
        rows: [
            "0 1 s(2-3) s(2+3) 4 5 6 7",
            "2 3 s(0-1) s(0+1) 5 4 7 6",
            "s(1+3) s(0-2) h(0+1+2-3) h(0-1+2+3) 6_6 7_6 4 5",
            "s(1-3) s(0+2) h(0+1-2+3) h(0-1-2-3) 7_6 6_6 5 4",
            "4 5 s(6-7) s(6+7) 0^0@21 1^0@21 2^0@21 3^0@21",
            "6 7 s(0-1) s(4+5) 1^1@21 0^1@21 3^1@21 2^1@21",
            "s(5+7) s(4-6) h(4+5+6-7) h(4-5+6+7) 2^2@21 3^2@21 0^2@21 1^2@21",
            "s(5-7) s(4+6) h(4+5-6+7) h(4-5-6-7) 3^3@21 2^3@21 1^3@21 0^3@21",
        ],
    },
    PrintedCase {
        case_id: 25,
        cardinality: 51,
        rows: [
            "0 1 s(2-3) s(2+3) 4^0@7 5^0@7 6^0@7 7^0@7",
            "2 3 s(0-1) s(0+1) 5^1@7 4^1@7 7^1@7 6^1@7",
            "s(1+3) s(0-2) h(0+1+2-3) h(0-1+2+3) 6^2@7 7^2@7 4^2@7 5^2@7",
            "s(1-3) s(0+2) h(0+1-2+3) h(0-1-2-3) 7^3@7 6^3@7 5^3@7 4^3@7",
            "4 5 s(6-7) s(6+7) 0_4 1_4 2_4 3",
            "6 7 s(0-1) s(4+5) 1_4 0_4 3 2_4",
            "s(5+7) s(4-6) h(4+5+6-7) h(4-5+6+7) 2_4 3 0_4 1_4",
            "s(5-7) s(4+6) h(4+5-6+7) h(4-5-6-7) 3 2_4 1_4 0_4",
        ],
    },
    PrintedCase {
        case_id: 26,
        cardinality: 52,
        rows: [
            "0 1 s(2-3) s(2+3) 4 5 6 7",
            "2 3 s(0-1) s(0+1) 5 4 7 6",
            "s(1+3) s(0-2) h(0+1+2-3) h(0-1+2+3) 6_6 7_6 4_7 5_7",
            "s(1-3) s(0+2) h(0+1-2+3) h(0-1-2-3) 7_6 6_6 5_7 4_7",
            "4 5 s(6-7) s(6+7) 0^0@21 1^0@21 2^0@21 3^0@21",
            "6 7 s(0-1) s(4+5) 1^1@21 0^1@21 3^1@21 2^1@21",
            "s(5+7) s(4-6) h(4+5+6-7) h(4-5+6+7) 2^2@21 3^2@21 0^2@21 1^2@21",
            "s(5-7) s(4+6) h(4+5-6+7) h(4-5-6-7) 3^3@21 2^3@21 1^3@21 0^3@21",
        ],
    },
    PrintedCase {
        case_id: 27,
        cardinality: 54,
        rows: [
            "0 1 s(2-3) s(2+3) 4 5 6 7",
            "2 3 s(0-1) s(0+1) 5 4 7 6",
            "s(1+3) s(0-2) h(0+1+2-3) h(0-1+2+3) 6_6 7_6 4 5",
            "s(1-3) s(0+2) h(0+1-2+3) h(0-1-2-3) 7_6 6_6 5 4",
            "4^0@7 5^0@7 6^0@7 7^0@7 0^0@21 1^0@21 2^0@21 3^0@21",
            "5^1@7 4^1@7 7^1@7 6^1@7 1^1@21 0^1@21 3^1@21 2^1@21",
            "6^2@7 7^2@7 4^2@7 5^2@7 2^2@21 3^2@21 0^2@21 1^2@21",
            "7^3@7 6^3@7 5^3@7 4^3@7 3^3@21 2^3@21 1^3@21 0^3@21",
        ],
    },
    PrintedCase {
        case_id: 28,
        cardinality: 56,
        rows: [
            "0 1 s(2-3) s(2+3) 4 5 6 7",
            "2 3 s(0-1) s(0+1) 5 4 7 6",
            "s(1+3) s(0-2) h(0+1+2-3) h(0-1+2+3) 6_6 7_6 4_7 5_7",
            "s(1-3) s(0+2) h(0+1-2+3) h(0-1-2-3) 7_6 6_6 5_7 4_7",
            "4^0@7 5^0@7 6^0@7 7^0@7 0^0@21 1^0@21 2^0@21 3^0@21",
            "5^1@7 4^1@7 7^1@7 6^1@7 1^1@21 0^1@21 3^1@21 2^1@21",
            "6^2@7 7^2@7 4^2@7 5^2@7 2^2@21 3^2@21 0^2@21 1^2@21",
            "7^3@7 6^3@7 5^3@7 4^3@7 3^3@21 2^3@21 1^3@21 0^3@21",
        ],
    },
    PrintedCase {
        case_id: 29,
        cardinality: 60,
        rows: [
            "0 1 s(2-3) s(2+3) 4^0@22 5^0@22 6^0@22 7^0@22",
            "2 3 s(0-1) s(0+1) 5^1@22 4^1@22 7^1@22 6^1@22",
            "s(1+3) s(0-2) h(0+1+2-3) h(0-1+2+3) 6^2@22 7^2@22 4^2@22 5^2@22",
            "s(1-3) s(0+2) h(0+1-2+3) h(0-1-2-3) 7^3@22 6^3@22 5^3@22 4^3@22",
            "4 5 s(6-7) s(6+7) 0^0@21 1^0@21 2^0@21 3^0@21",
            "6 7 s(0-1) s(4+5) 1^1@21 0^1@21 3^1@21 2^1@21",
            "s(5+7) s(4-6) h(4+5+6-7) h(4-5+6+7) 2^2@21 3^2@21 0^2@21 1^2@21",
            "s(5-7) s(4+6) h(4+5-6+7) h(4-5-6-7) 3^3@21 2^3@21 1^3@21 0^3@21",
        ],
    },
];
