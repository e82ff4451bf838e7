"""
单项式理想LCM对偶计算与验证系统 - 命令行界面

主程序入口，提供LCM对偶、Ferrers理想、胞腔分解、特殊纤维环与自检命令。
退出码：0 正常，1 验证失败，2 解析错误，3 领域错误。
"""

import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

import click

# 添加项目根目录到路径
sys.path.append(str(Path(__file__).parent))

from config import Config
from src.analysis.ferrers import (
    Partition,
    Shift,
    alexander_dual,
    complement_edge_ideal,
    ferrers_dual_primary_decomposition,
    ferrers_graph,
    ferrers_ideal,
    generalized_ferrers_ideal,
    intersect_all,
    is_irredundant,
    shift_preserves_generator_count,
    specialize,
    strongly_stable_from_partition,
)
from src.analysis.fiber import (
    check_fiber_hypotheses,
    fiber_dimension,
    minors_match_relations,
    relation_counts,
    relations_to_json,
    toric_relations,
    verify_fiber_isomorphism,
)
from src.analysis.property_checks import PropertyChecker, worked_examples
from src.core.errors import MonomialIdealError, ParseError, VerificationError
from src.core.io_formats import (
    bipartite_names,
    canonical_json,
    format_ideal,
    format_monomial,
    ideal_to_json,
    parse_ideal,
    parse_int_list,
    standard_names,
)
from src.core.monomial_core import height, is_strongly_stable, lcm_dual, lcm_of_ideal
from src.resolution.cellular_complex import boundary_maps, build_complex, differentials_to_json, to_dot
from src.resolution.verifier import betti_table, describe_failure, summarize_complex, verify_resolution

# 设置日志
from src.utils.logger_config import get_logger, setup_logging

logger = get_logger(__name__)


@dataclass
class CommandResult:
    """命令输出：status 为 ok 或 error"""

    status: str = "ok"
    payload: Dict[str, Any] = field(default_factory=dict)
    diagnostics: List[str] = field(default_factory=list)

    def to_json(self) -> str:
        return canonical_json(asdict(self))


def _abort(error: MonomialIdealError, as_json: bool) -> None:
    """打印错误并以异常对应的退出码结束"""
    logger.warning(f"{type(error).__name__}: {str(error)}")
    if as_json:
        payload = {"error": type(error).__name__, "message": str(error)}
        if isinstance(error, VerificationError):
            payload["check"] = error.check
        click.echo(CommandResult(status="error", payload=payload).to_json())
    elif isinstance(error, VerificationError):
        click.echo(f"❌ {describe_failure(error)}", err=True)
    else:
        click.echo(f"❌ {type(error).__name__}: {str(error)}", err=True)
    sys.exit(error.exit_code)


def _parse_partition(text: str) -> Partition:
    return Partition(parse_int_list(text, "分拆"))


@click.group()
def cli():
    """单项式理想LCM对偶计算与验证系统"""
    setup_logging()
    Config.validate()


@cli.command()
@click.option('--ideal', '-i', 'ideal_text', required=True,
              help='理想，如 "x1^3, x1^2*x2^2, x2^4" 或JSON')
@click.option('--n', '-n', 'ambient', type=int, default=None, help='变量个数')
@click.option('--json', 'as_json', is_flag=True, help='输出JSON')
def dual(ideal_text, ambient, as_json):
    """计算LCM对偶、高度证书与双重对偶"""
    try:
        ideal, names = parse_ideal(ideal_text, n=ambient)
        m_i = lcm_of_ideal(ideal)
        dual_ideal = lcm_dual(ideal)
        certificate = height(ideal)
        double_ok = lcm_dual(dual_ideal) == ideal

        result = CommandResult(payload={
            "ideal": format_ideal(ideal, names),
            "lcm": format_monomial(m_i, names),
            "dual": format_ideal(dual_ideal, names),
            "dual_exponents": ideal_to_json(dual_ideal),
            "height": certificate.height,
            "witness_prime": [names[k] for k in certificate.witness_prime],
            "double_dual_equals_ideal": double_ok,
        })
        if not double_ok and certificate.height == 1:
            result.diagnostics.append("height 1: double dual differs")
        elif not double_ok:
            raise VerificationError("double_dual", format_ideal(ideal, names))
        else:
            result.diagnostics.append("double dual returns I")

        if as_json:
            click.echo(result.to_json())
            return
        click.echo(f"🔍 I = ({result.payload['ideal']})")
        click.echo(f"  lcm(I) = {result.payload['lcm']}")
        click.echo(f"  dual: {result.payload['dual']}")
        click.echo(f"  height {certificate.height} (witness: {', '.join(result.payload['witness_prime'])})")
        if double_ok:
            click.echo("✅ double dual returns I")
        else:
            click.echo("⚠️ height 1: double dual differs")
    except MonomialIdealError as e:
        _abort(e, as_json)


@cli.command()
@click.option('--lambda', '-l', 'lam_text', required=True, help='分拆，如 4,4,3')
@click.option('--mu', '-u', 'mu_text', default=None, help='平移向量，如 0,1,2')
@click.option('--specialize', 'do_specialize', is_flag=True, help='输出特化 y_i -> x_i')
@click.option('--decompose', is_flag=True, help='输出LCM对偶的准素分解')
@click.option('--verify', is_flag=True, help='验证三方相等')
@click.option('--json', 'as_json', is_flag=True, help='输出JSON')
def ferrers(lam_text, mu_text, do_specialize, decompose, verify, as_json):
    """Ferrers理想、广义Ferrers理想、特化与准素分解"""
    try:
        lam = _parse_partition(lam_text)
        names = bipartite_names(lam.m, lam.n)
        if mu_text:
            mu = Shift(parse_int_list(mu_text, "平移向量"))
            ideal = generalized_ferrers_ideal(lam, mu)
        else:
            mu = None
            ideal = ferrers_ideal(lam)

        result = CommandResult(payload={
            "lambda": list(lam.parts),
            "ideal": format_ideal(ideal, names),
            "num_generators": ideal.num_generators,
            "dual": format_ideal(lcm_dual(ideal), names),
        })

        if do_specialize:
            special = specialize(ideal, lam.m, lam.n)
            result.payload["specialization"] = format_ideal(special, standard_names(special.ambient_n))
            result.payload["specialization_strongly_stable"] = is_strongly_stable(special)
            if mu is not None and all(u >= i for i, u in enumerate(mu.mu)):
                if not shift_preserves_generator_count(lam, mu):
                    raise VerificationError("generator_count", {"lambda": str(lam)})
                result.diagnostics.append(f"generator count {special.num_generators} preserved")

        if decompose:
            components = ferrers_dual_primary_decomposition(lam)
            result.payload["components"] = [c.names(names) for c in components]
            if verify:
                base = ferrers_ideal(lam)
                intersection = intersect_all(components, base.ambient_n)
                alexander = alexander_dual(complement_edge_ideal(ferrers_graph(lam)))
                if not is_irredundant(components):
                    raise VerificationError("irredundant", {"lambda": str(lam)})
                if not (intersection == lcm_dual(base) == alexander):
                    raise VerificationError("decomposition", {"lambda": str(lam)})
                result.diagnostics.append("equality OK")

        if as_json:
            click.echo(result.to_json())
            return
        click.echo(f"📐 lambda = {lam}" + (f", mu = {','.join(map(str, mu.mu))}" if mu else ""))
        click.echo(f"  I ({ideal.num_generators} 个生成元): {result.payload['ideal']}")
        click.echo(f"  dual: {result.payload['dual']}")
        if do_specialize:
            click.echo(f"  specialization: {result.payload['specialization']}")
        if decompose:
            components = result.payload["components"]
            click.echo(f"  {len(components)} components:")
            for component in components:
                click.echo(f"    ({', '.join(component)})")
        for line in result.diagnostics:
            click.echo(f"✅ {line}")
    except MonomialIdealError as e:
        _abort(e, as_json)


@cli.command()
@click.option('--lambda', '-l', 'lam_text', required=True, help='分拆，如 4,4,3')
@click.option('--verify', is_flag=True, help='运行正合性、极小性、公式与Betti数验证器')
@click.option('--dot', is_flag=True, help='只输出有向图的DOT文本')
@click.option('--json', 'as_json', is_flag=True, help='输出JSON')
def resolve(lam_text, verify, dot, as_json):
    """LCM对偶的胞腔极小自由分解"""
    try:
        lam = _parse_partition(lam_text)
        complex_ = build_complex(lam)
        if dot:
            click.echo(to_dot(complex_))
            return
        free = boundary_maps(complex_)
        summary = verify_resolution(lam, use_oracle=True) if verify else summarize_complex(complex_, free)

        degenerate = lam.m == 1 or not complex_.faces
        result = CommandResult(
            payload={**summary.to_dict(), "differentials": differentials_to_json(free)},
            diagnostics=list(summary.diagnostics),
        )
        if degenerate:
            result.diagnostics.append("degenerate case: no faces, regularity corollary not applied")
        if verify:
            result.diagnostics.append("all checks pass")

        if as_json:
            click.echo(result.to_json())
            return
        b1, b2, b3 = summary.betti
        headline = (
            f"β=({b1},{b2},{b3}), shifts={summary.shifts}, reg={summary.regularity}, "
            f"pd={summary.projective_dimension}"
        )
        if summary.is_linear:
            headline += ", linear"
        click.echo(f"🧮 lambda = {lam}: {complex_.num_vertices} vertices, "
                   f"{complex_.num_edges} edges, {complex_.num_faces} faces")
        click.echo(headline)
        click.echo(betti_table(summary).to_string())
        if degenerate:
            click.echo("ℹ️ degenerate case: no faces, regularity corollary not applied")
        if verify:
            for line in summary.diagnostics:
                click.echo(f"  ✓ {line}")
            click.echo("✅ all checks pass")
    except MonomialIdealError as e:
        _abort(e, as_json)


@cli.command()
@click.option('--ideal', '-i', 'ideal_text', default=None, help='等次生成、高度 >= 2 的理想')
@click.option('--lambda', '-l', 'lam_text', default=None, help='强稳定分拆，如 4,4,3')
@click.option('--rmax', '-r', type=click.IntRange(min=1), default=Config.DEFAULT_RMAX, help='关系次数上界')
@click.option('--json', 'as_json', is_flag=True, help='输出JSON')
def fiber(ideal_text, lam_text, rmax, as_json):
    """特殊纤维环关系与同构验证"""
    try:
        if (ideal_text is None) == (lam_text is None):
            raise ParseError("请只提供 --ideal 或 --lambda 中的一个")
        lam = _parse_partition(lam_text) if lam_text else None
        if lam is not None:
            ideal = strongly_stable_from_partition(lam)
        else:
            ideal, _ = parse_ideal(ideal_text)

        check_fiber_hypotheses(ideal)
        counts = relation_counts(ideal, rmax)
        matched = verify_fiber_isomorphism(ideal, rmax)
        dims = (fiber_dimension(ideal), fiber_dimension(lcm_dual(ideal)))
        result = CommandResult(payload={
            "ideal": format_ideal(ideal),
            "rmax": rmax,
            "relation_counts": {
                side: {str(r): count for r, count in row.items()} for side, row in counts.items()
            },
            "relations": {
                str(r): relations_to_json(toric_relations(ideal, r)) for r in range(1, rmax + 1)
            },
            "fiber_dimension": dims[0],
            "dual_fiber_dimension": dims[1],
        })
        if not matched:
            raise VerificationError("fiber_relations", counts)
        result.diagnostics.append(f"relations match through degree {rmax}")
        if dims[0] != dims[1]:
            raise VerificationError("fiber_dimension", {"ideal": dims[0], "dual": dims[1]})

        if lam is not None:
            minors = minors_match_relations(lam)
            result.payload["minors"] = minors
            if not all(minors.values()):
                raise VerificationError("minors", minors)
            result.diagnostics.append("minors == degree-2 relations")

        if as_json:
            click.echo(result.to_json())
            return
        click.echo(f"🔗 I = ({result.payload['ideal']})")
        for r in range(1, rmax + 1):
            click.echo(f"  degree {r}: I {counts['ideal'][r]} relations, dual {counts['dual'][r]} relations")
        click.echo(f"✅ relations match through degree {rmax}")
        click.echo(f"  dim F = {dims[0]}")
        if lam is not None:
            click.echo("✅ minors == degree-2 relations")
    except MonomialIdealError as e:
        _abort(e, as_json)


@cli.command()
@click.option('--seed', '-s', type=int, default=None, help='随机种子（默认 Config.DEFAULT_SEED）')
@click.option('--samples', type=int, default=None, help='双重对偶律的随机理想个数')
@click.option('--product-samples', type=int, default=None, help='乘积律的随机理想对个数')
@click.option('--progress/--no-progress', default=False, help='显示进度条')
@click.option('--json', 'as_json', is_flag=True, help='输出JSON')
def selftest(seed, samples, product_samples, progress, as_json):
    """随机对偶律检验与定理穷举"""
    try:
        examples = worked_examples()
        checker = PropertyChecker(seed=seed, show_progress=progress)
        report = checker.run_selftest(samples, product_samples)
        report["worked_examples"] = examples
        passed = report["passed"] and all(examples.values())
        result = CommandResult(status="ok" if passed else "error", payload=report)

        if as_json:
            click.echo(result.to_json())
        else:
            click.echo(f"🧪 selftest (seed={report['seed']})")
            dd = report["double_dual"]
            click.echo(f"  double dual: {dd['height_ge_2']} ideals of height >= 2, "
                       f"{dd['height_1_violations']} height-1 counterexamples")
            click.echo(f"  product law: {report['product_law']['samples']} pairs")
            for key in ("decompositions", "resolutions", "fibers"):
                click.echo(f"  {key}: {report[key]['partitions']} partitions, "
                           f"{report[key]['failures']} failures")
            for name, ok in examples.items():
                click.echo(f"  {'✓' if ok else '✗'} {name}")
            for failure in report["failures"]:
                click.echo(f"  ❌ {failure}", err=True)
            click.echo("✅ all checks pass" if passed else "❌ selftest failed")
        if not passed:
            sys.exit(VerificationError.exit_code)
    except MonomialIdealError as e:
        _abort(e, as_json)


if __name__ == '__main__':
    cli()
