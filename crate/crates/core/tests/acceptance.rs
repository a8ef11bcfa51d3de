//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::{BTreeSet, HashSet};

use braidcube::{
    braid_graph, brute_min_length, choose_sigma, embed_word, enumerate_braid_class,
    enumerate_matsumoto, fibonacci_cube, image_is_fibonacci, is_fibonacci_link, is_link,
    isometric_dimension, link_factorization, partition_xy, small_iso, star_criterion,
    theta_classes, type_a_string, verify_box_product, verify_isometric, BraidClass, CoxeterGraph,
    Epsilon, Error, Family, IsoWitness, SimpleGraph, StringSpec, Word, DEFAULT_CAP,
};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn w(s: &str) -> Word {
    Word::new(s.chars().map(|c| c.to_digit(10).unwrap() as usize))
}

fn word_set(list: &[&str]) -> BTreeSet<Word> {
    list.iter().map(|s| w(s)).collect()
}

fn family(f: Family, n: usize) -> CoxeterGraph {
    CoxeterGraph::standard_family(f, n).unwrap()
}

fn class_of(graph: &CoxeterGraph, word: &str) -> BraidClass {
    enumerate_braid_class(graph, &w(word), DEFAULT_CAP).unwrap()
}

fn is_path_graph(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    if n == 1 {
        return g.edge_count() == 0;
    }
    g.is_connected()
        && g.edge_count() == n - 1
        && (0..n).all(|v| g.degree(v) <= 2)
        && (0..n).filter(|&v| g.degree(v) == 1).count() == 2
}

fn pass(criterion: usize, message: &str) {
    println!("criterion {criterion:02} PASS: {message}");
}

#[test]
fn criterion_01_a3_longest_element_classes() {
    let a3 = family(Family::A, 3);
    let matsumoto = enumerate_matsumoto(&a3, &w("123121"), DEFAULT_CAP).unwrap();
    assert_eq!(matsumoto.len(), 16);

    let all: BTreeSet<Word> = matsumoto.members().iter().cloned().collect();
    let expected_all = word_set(&[
        "132312", "312132", "321232", "321323", "323123", "232123", "231213", "213231", "212321",
        "121321", "123121", "123212", "132132", "312312", "213213", "231231",
    ]);
    assert_eq!(all, expected_all);

    let braid_classes: BTreeSet<BTreeSet<Word>> = matsumoto
        .braid_components()
        .into_iter()
        .map(|c| c.into_iter().map(|i| matsumoto.members()[i].clone()).collect())
        .collect();
    let expected_braid: BTreeSet<BTreeSet<Word>> = [
        word_set(&["123121", "123212", "132312"]),
        word_set(&["312312"]),
        word_set(&["312132", "321232", "321323"]),
        word_set(&["132132"]),
        word_set(&["121321", "212321", "213231"]),
        word_set(&["213213"]),
        word_set(&["231213", "232123", "323123"]),
        word_set(&["231231"]),
    ]
    .into_iter()
    .collect();
    assert_eq!(braid_classes, expected_braid);

    let commutation_classes: BTreeSet<BTreeSet<Word>> = matsumoto
        .commutation_components()
        .into_iter()
        .map(|c| c.into_iter().map(|i| matsumoto.members()[i].clone()).collect())
        .collect();
    let expected_commutation: BTreeSet<BTreeSet<Word>> = [
        word_set(&["232123"]),
        word_set(&["231213", "213213", "213231", "231231"]),
        word_set(&["321323", "323123"]),
        word_set(&["212321"]),
        word_set(&["321232"]),
        word_set(&["123121", "121321"]),
        word_set(&["132312", "132132", "312132", "312312"]),
        word_set(&["123212"]),
    ]
    .into_iter()
    .collect();
    assert_eq!(commutation_classes, expected_commutation);

    let mut braid_sizes: Vec<usize> = braid_classes.iter().map(|c| c.len()).collect();
    braid_sizes.sort_unstable();
    assert_eq!(braid_sizes, vec![1, 1, 1, 1, 3, 3, 3, 3]);
    let mut commutation_sizes: Vec<usize> = commutation_classes.iter().map(|c| c.len()).collect();
    commutation_sizes.sort_unstable();
    assert_eq!(commutation_sizes, vec![1, 1, 1, 1, 2, 2, 4, 4]);

    // The longest element really has length 6.
    assert_eq!(brute_min_length(&a3, &w("123121"), 8).unwrap(), 6);

    pass(1, "A_3 longest element: 16 expressions, 8 braid and 8 commutation classes match");
}

#[test]
fn criterion_02_a4_link_class() {
    let a4 = family(Family::A, 4);
    let class = class_of(&a4, "1213243");
    let members: BTreeSet<Word> = class.members().iter().cloned().collect();
    assert_eq!(
        members,
        word_set(&["1213243", "2123243", "2132343", "2132434"])
    );
    assert!(is_path_graph(&braid_graph(&class)));
    assert_eq!(class.rank(), 3);

    let labeling = embed_word(&a4, &w("1213243"), DEFAULT_CAP, false).unwrap();
    assert!(labeling.labels.iter().all(|l| l.len() == 3));
    let report = verify_isometric(&braid_graph(&labeling.class), &labeling.labels).unwrap();
    assert!(report.isometric);

    // Strict inequality: the single factor has rank 3 > 1.
    assert_eq!(class.len(), 4);
    assert!(class.len() < 1 << class.rank());

    pass(2, "A_4 class of 1213243: P_4 braid graph, rank 3, isometric in Q_3, 4 < 2^3");
}

#[test]
fn criterion_03_a6_box_product() {
    let a6 = family(Family::A, 6);
    let class = class_of(&a6, "1213243565");
    let members: BTreeSet<Word> = class.members().iter().cloned().collect();
    assert_eq!(
        members,
        word_set(&[
            "1213243565",
            "2123243565",
            "2132343565",
            "2132434565",
            "1213243656",
            "2123243656",
            "2132343656",
            "2132434656",
        ])
    );

    let report = verify_box_product(&a6, &w("1213243565"), DEFAULT_CAP).unwrap();
    assert!(report.pass(), "{:?}", report.failure);
    assert_eq!(report.factor_sizes, vec![4, 2]);

    // Explicit witness against P_4 box P_2 built by hand.
    let mut grid = SimpleGraph::from_labels(
        (0..4)
            .flat_map(|i| (0..2).map(move |j| format!("{i}{j}")))
            .collect(),
    );
    for i in 0..4 {
        for j in 0..2 {
            let v = i * 2 + j;
            if i + 1 < 4 {
                grid.add_edge(v, (i + 1) * 2 + j);
            }
            if j + 1 < 2 {
                grid.add_edge(v, i * 2 + j + 1);
            }
        }
    }
    let witness = small_iso(&braid_graph(&class), &grid).unwrap();
    assert!(matches!(witness, IsoWitness::Isomorphic(_)));

    pass(3, "A_6 class of 1213243565: 8 listed members, braid graph is P_4 box P_2");
}

#[test]
fn criterion_04_d4_isometric_dimension() {
    let d4 = family(Family::D, 4);
    let class = class_of(&d4, "2321434");
    let members: BTreeSet<Word> = class.members().iter().cloned().collect();
    assert_eq!(
        members,
        word_set(&["2321434", "3231434", "2321343", "3231343", "3213143"])
    );

    let bg = braid_graph(&class);
    assert_eq!(isometric_dimension(&bg).unwrap(), 3);
    assert_eq!(class.rank(), 3);

    let theta = theta_classes(&bg).unwrap();
    assert_eq!(theta.len(), 3);
    let theta_sets: BTreeSet<BTreeSet<(usize, usize)>> = theta
        .into_iter()
        .map(|c| c.into_iter().collect())
        .collect();
    let mut by_shadow: std::collections::BTreeMap<usize, BTreeSet<(usize, usize)>> =
        Default::default();
    for e in class.edges() {
        by_shadow.entry(e.shadow_lo).or_default().insert((e.a, e.b));
    }
    let shadow_sets: BTreeSet<BTreeSet<(usize, usize)>> = by_shadow.into_values().collect();
    assert_eq!(theta_sets, shadow_sets);

    pass(4, "D_4 class of 2321434: isometric dimension 3 = rank, 3 theta classes on shadow groups");
}

#[test]
fn criterion_05_d5_braid_graph_edges() {
    let d5 = family(Family::D, 5);
    let class = class_of(&d5, "232143454");
    let members: BTreeSet<Word> = class.members().iter().cloned().collect();
    let delta = [
        "232143454",
        "323143454",
        "232134354",
        "323134354",
        "321314354",
        "232143545",
        "323143545",
    ];
    assert_eq!(members, word_set(&delta));

    let edges: BTreeSet<(Word, Word)> = class
        .edges()
        .iter()
        .map(|e| {
            let a = class.members()[e.a].clone();
            let b = class.members()[e.b].clone();
            (a.clone().min(b.clone()), a.max(b))
        })
        .collect();
    let expected: BTreeSet<(Word, Word)> = [
        ("232143454", "323143454"), // d1 -- d2
        ("232143454", "232134354"), // d1 -- d3
        ("232143454", "232143545"), // d1 -- d6
        ("323143454", "323134354"), // d2 -- d4
        ("323143454", "323143545"), // d2 -- d7
        ("232134354", "323134354"), // d3 -- d4
        ("323134354", "321314354"), // d4 -- d5
        ("232143545", "323143545"), // d6 -- d7
    ]
    .into_iter()
    .map(|(a, b)| {
        let (a, b) = (w(a), w(b));
        (a.clone().min(b.clone()), a.max(b))
    })
    .collect();
    assert_eq!(class.edges().len(), 8);
    assert_eq!(edges, expected);

    pass(5, "D_5 class of 232143454: 7 members and the 8 expected braid-graph edges");
}

#[test]
fn criterion_06_d7_factorization() {
    let d7 = family(Family::D, 7);
    let word = w("3231343567543231343");
    let factorization = link_factorization(&d7, &word, DEFAULT_CAP).unwrap();
    assert_eq!(
        factorization.to_string(),
        "3231343 | 5 | 6 | 7 | 5 | 4 | 3231343"
    );

    let class = enumerate_braid_class(&d7, &word, DEFAULT_CAP).unwrap();
    assert_eq!(class.len(), 25);
    assert_eq!(class.rank(), 6);

    let labeling = embed_word(&d7, &word, DEFAULT_CAP, false).unwrap();
    assert!(labeling.labels.iter().all(|l| l.len() == 6));
    let report = verify_isometric(&braid_graph(&labeling.class), &labeling.labels).unwrap();
    assert!(report.isometric);

    pass(6, "D_7 word: 7 listed factors, class of 25, rank 6, isometric labels of length 6");
}

#[test]
fn criterion_07_d4_fibonacci_ladder() {
    let d4 = family(Family::D, 4);
    let ladder = ["343", "34313", "3431323", "343132343", "34313234313"];
    let expected_sizes = [2usize, 3, 5, 8, 13];
    for (i, text) in ladder.iter().enumerate() {
        let rank = i + 1;
        let word = w(text);
        assert!(is_fibonacci_link(&d4, &word, DEFAULT_CAP).unwrap());
        let class = enumerate_braid_class(&d4, &word, DEFAULT_CAP).unwrap();
        assert_eq!(class.rank(), rank);
        assert_eq!(class.len(), expected_sizes[i]);

        let bg = braid_graph(&class);
        let cube = fibonacci_cube(rank).unwrap();
        match small_iso(&bg, &cube).unwrap() {
            IsoWitness::Isomorphic(mapping) => {
                for (u, v) in bg.edges() {
                    assert!(cube.has_edge(mapping[u], mapping[v]));
                }
            }
            IsoWitness::NotIsomorphic => panic!("rank {rank}: not a Fibonacci cube"),
        }

        assert!(image_is_fibonacci(&class, &word).unwrap());

        if rank >= 2 {
            let top_degree: Vec<usize> = (0..bg.vertex_count())
                .filter(|&v| bg.degree(v) == rank)
                .collect();
            assert_eq!(top_degree.len(), 1);
            assert_eq!(bg.label(top_degree[0]), word.to_string());
        }
    }
    pass(7, "D_4 Fibonacci ladder: sizes 2,3,5,8,13, Fibonacci cubes, no-11 images, unique top vertex");
}

#[test]
fn criterion_08_fibonacci_partition() {
    let d4 = family(Family::D, 4);
    let class = class_of(&d4, "343132343");
    let sigma = choose_sigma(&class, class.rank() - 1).unwrap();
    let (x, y) = partition_xy(&class, &sigma).unwrap();
    let x_set: BTreeSet<Word> = x.into_iter().collect();
    let y_set: BTreeSet<Word> = y.into_iter().collect();
    assert_eq!(
        x_set,
        word_set(&["343132343", "434132343", "434123243", "341312343", "343123243"])
    );
    assert_eq!(y_set, word_set(&["343132434", "434132434", "341312434"]));
    pass(8, "Fibonacci partition of [343132343]: X has the 5 listed words, Y the 3 listed words");
}

#[test]
fn criterion_09_type_a_strings() {
    // The six golden strings, byte-exact.
    let golden = [
        (0, "45465768798"),
        (1, "54565768798"),
        (2, "54656768798"),
        (3, "54657678798"),
        (4, "54657687898"),
        (5, "54657687989"),
    ];
    for (k, expected) in golden {
        let spec = StringSpec { l: 6, k, m: 4, eps: Epsilon::Plus };
        assert_eq!(type_a_string(&spec).unwrap().to_string(), expected);
    }

    // The six strings form one braid class whose graph is a path on 6
    // vertices.
    let a9 = family(Family::A, 9);
    let class = class_of(&a9, "45465768798");
    let members: BTreeSet<Word> = class.members().iter().cloned().collect();
    let expected: BTreeSet<Word> = golden.iter().map(|&(_, s)| w(s)).collect();
    assert_eq!(members, expected);
    assert!(is_path_graph(&braid_graph(&class)));
    assert_eq!(class.len(), 6);

    // Exhaustive check in A_5 up to length 9: a reduced word is a link
    // exactly when it is one of the strings.
    let a5 = family(Family::A, 5);
    let mut strings: HashSet<Word> = HashSet::new();
    for l in 1..=5usize {
        for m in 1..=5 {
            if m + l - 1 > 5 {
                continue;
            }
            for k in 0..l {
                let signs: &[Epsilon] = if l <= 2 {
                    &[Epsilon::Zero]
                } else {
                    &[Epsilon::Plus, Epsilon::Minus]
                };
                for &eps in signs {
                    strings.insert(type_a_string(&StringSpec { l, k, m, eps }).unwrap());
                }
            }
        }
    }

    let mut stack: Vec<Word> = (1..=5).map(|s| Word::new([s])).collect();
    let mut checked = 0usize;
    while let Some(word) = stack.pop() {
        let link = is_link(&a5, &word, DEFAULT_CAP).unwrap();
        assert_eq!(
            link,
            strings.contains(&word),
            "word {word}: is_link and string membership disagree"
        );
        checked += 1;
        if word.len() < 9 {
            for s in a5.generators() {
                if braidcube::extension_is_reduced(&a5, &word, s).unwrap() {
                    let mut letters: Vec<usize> =
                        word.letters().iter().map(|g| g.index()).collect();
                    letters.push(s.index());
                    stack.push(Word::new(letters));
                }
            }
        }
    }
    assert_eq!(checked, 34379, "number of nonempty reduced words up to length 9 in A_5");

    pass(9, "type-A strings: six golden words, one P_6 class, and link = string on all A_5 words up to length 9");
}

#[test]
fn criterion_10_affine_a2_negative_controls() {
    let at2 = family(Family::ATilde, 2);
    let alpha = w("1213121");
    let beta = w("2123212");

    let class = enumerate_braid_class(&at2, &alpha, DEFAULT_CAP).unwrap();
    assert!(class.contains(&beta));

    // Both words expose the shadow [3,5] yet disagree on its support.
    let shadows_alpha = braidcube::braid_shadows(&at2, &alpha).unwrap();
    let shadows_beta = braidcube::braid_shadows(&at2, &beta).unwrap();
    let iv = braidcube::Interval::shadow(3);
    assert!(shadows_alpha.contains(&iv) && shadows_beta.contains(&iv));
    let support_alpha = braidcube::local_support(&alpha, iv).unwrap();
    let support_beta = braidcube::local_support(&beta, iv).unwrap();
    assert_ne!(support_alpha, support_beta);

    let violations = class.equal_support_violations();
    let a_idx = class.member_index(&alpha).unwrap();
    let b_idx = class.member_index(&beta).unwrap();
    assert!(violations.contains(&(a_idx.min(b_idx), a_idx.max(b_idx), 3)));

    // Embedding refuses the graph with a three-cycle.
    assert_eq!(
        embed_word(&at2, &alpha, DEFAULT_CAP, false).unwrap_err(),
        Error::NotTriangleFree
    );

    // Class supports of the two centers reproduce the triangle behavior.
    let supp4 = class.support(braidcube::Interval::point(4)).unwrap();
    let supp6 = class.support(braidcube::Interval::point(6)).unwrap();
    let to_set = |v: &[usize]| {
        v.iter()
            .map(|&i| braidcube::Generator(i))
            .collect::<BTreeSet<_>>()
    };
    assert_eq!(supp4, to_set(&[1, 2, 3]));
    assert_eq!(supp6, to_set(&[1, 2]));
    assert_eq!(
        supp4.intersection(&supp6).count(),
        2,
        "overlapping shadow supports meet in two generators on the triangle"
    );

    pass(10, "affine A_2 controls: support equality fails, embedding refused, class supports {1,2,3} and {1,2}");
}

#[test]
fn criterion_11_randomized_property_suite() {
    let systems = [
        family(Family::A, 5),
        family(Family::D, 5),
        family(Family::DTilde, 5),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    let mut produced = 0usize;
    while produced < 500 {
        let graph = &systems[produced % systems.len()];
        let target_len = rng.gen_range(1..=12);
        let mut word = Word::new([rng.gen_range(1..=graph.generator_count())]);
        while word.len() < target_len {
            let candidates: Vec<_> = graph
                .generators()
                .filter(|&s| braidcube::extension_is_reduced(graph, &word, s).unwrap())
                .collect();
            if candidates.is_empty() {
                break;
            }
            let s = candidates[rng.gen_range(0..candidates.len())];
            let mut letters: Vec<usize> = word.letters().iter().map(|g| g.index()).collect();
            letters.push(s.index());
            word = Word::new(letters);
        }
        produced += 1;

        let class = enumerate_braid_class(graph, &word, DEFAULT_CAP).unwrap();

        // Closure soundness.
        let base_fp = braidcube::group_element_fingerprint(graph, &word).unwrap();
        for member in class.members() {
            assert_eq!(member.len(), word.len());
            assert!(braidcube::is_reduced(graph, member).unwrap());
            assert_eq!(
                braidcube::group_element_fingerprint(graph, member).unwrap(),
                base_fp
            );
        }

        // Class shadows never sit at adjacent start positions.
        let los: Vec<usize> = class.shadow_los().collect();
        for pair in los.windows(2) {
            assert!(pair[1] > pair[0] + 1, "adjacent shadows in {word}");
        }

        // Cardinality bound and the equality characterization.
        assert!(class.len() <= 1 << class.rank());
        let report = verify_box_product(graph, &word, DEFAULT_CAP).unwrap();
        assert!(report.pass(), "box product failed for {word}: {:?}", report.failure);
        let all_small = report.factor_ranks.iter().all(|&r| r <= 1);
        assert_eq!(
            class.len() == 1 << class.rank(),
            all_small,
            "bound equality mismatch for {word}"
        );

        // Isometric labeling.
        let labeling = embed_word(graph, &word, DEFAULT_CAP, false).unwrap();
        let bg = braid_graph(&labeling.class);
        let iso = verify_isometric(&bg, &labeling.labels).unwrap();
        assert!(iso.isometric, "labeling of {word} is not isometric");

        // Braid distance agrees with the independent all-pairs oracle.
        let table = braidcube::all_pairs_distances(&bg).unwrap();
        for (a, row) in table.iter().enumerate() {
            for (b, &expected) in row.iter().enumerate() {
                assert_eq!(
                    class
                        .distance(&class.members()[a], &class.members()[b])
                        .unwrap(),
                    expected
                );
            }
        }
    }
    pass(11, "500 seeded random words in A_5, D_5, D~_5 satisfy closure, bound, box, isometry, distance");
}

#[test]
fn criterion_12_d5_lucas_class() {
    let d5 = family(Family::D, 5);
    let word = w("4534313234313");
    let class = enumerate_braid_class(&d5, &word, DEFAULT_CAP).unwrap();
    assert_eq!(class.len(), 18);
    assert!(is_link(&d5, &word, DEFAULT_CAP).unwrap());
    assert!(!is_fibonacci_link(&d5, &word, DEFAULT_CAP).unwrap());
    assert!(!star_criterion(&d5, &word, DEFAULT_CAP).unwrap());
    pass(12, "D_5 word 4534313234313: class of 18, a link, not Fibonacci, support not a star");
}
