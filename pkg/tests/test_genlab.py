from karpkit.genlab import SCALE_PARAM, GeneratorSpec, generate, scaled_spec
from karpkit.instances import KINDS, measure_input_size, validate
from karpkit.oracles import solve
from karpkit.reductions import REDUCTIONS

GENERATED_KINDS = tuple(k for k in KINDS if k != "job_sequencing")


def test_every_kind_has_a_generator():
    for kind in GENERATED_KINDS:
        p = generate(GeneratorSpec(kind, 1))
        assert p.kind == kind
        validate(p)


def test_full_density_gives_complete_graph():
    p = generate(GeneratorSpec("hcp", 123, {"vertices": 6, "density": 1.0}))
    assert len(p.payload.edges) == 15


def test_determinism():
    for kind in GENERATED_KINDS:
        spec = GeneratorSpec(kind, 7, {})
        assert generate(spec) == generate(spec), kind


def test_sat_seed7_repeatable():
    spec = GeneratorSpec("sat", 7, {"clauses": 4, "max_clause": 5})
    assert generate(spec) == generate(spec)


def test_different_seeds_differ_somewhere():
    instances = {generate(GeneratorSpec("sat", s, {"clauses": 6})) for s in range(8)}
    assert len(instances) > 1


def test_partition_answer_matches_reduced_knapsack():
    spec = GeneratorSpec("partition", 11, {"items": 8, "max_value": 50})
    p = generate(spec)
    t = REDUCTIONS["partition_to_knapsack"].apply(p)
    assert solve(p).answer == solve(t).answer


def test_scale_monotone_element_size():
    scales = (4, 8, 16, 32, 64)
    for kind in SCALE_PARAM:
        spec = GeneratorSpec(kind, 5, {"density": 0.4})
        if kind == "three_dim_matching":
            scales_k = (2, 3, 4, 6, 8)
        else:
            scales_k = scales
        sizes = [
            measure_input_size(generate(scaled_spec(spec, s)), "element")
            for s in scales_k
        ]
        assert sizes == sorted(sizes), (kind, sizes)
        assert sizes[0] < sizes[-1], kind


def test_scaling_extends_without_rerolling():
    small = generate(GeneratorSpec("sat", 3, {"clauses": 4, "literals": 6}))
    big = generate(GeneratorSpec("sat", 3, {"clauses": 6, "literals": 6}))
    assert big.payload.clauses[:4] == small.payload.clauses


def test_generous_budget_steiner_is_always_yes():
    for seed in range(5):
        p = generate(GeneratorSpec("steiner_tree", seed, {"generous_budget": True}))
        assert p.payload.budget >= sum(p.payload.graph.weights)


def test_with_params_merges():
    spec = GeneratorSpec("sat", 1, {"clauses": 4})
    spec2 = spec.with_params(literals=9)
    assert spec2.params == {"clauses": 4, "literals": 9}
    assert spec.params == {"clauses": 4}
