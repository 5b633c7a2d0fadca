# -*- coding=utf-8

import argparse
import io
import logging
import sys

from .fac_comm import DEFAULT_RADIUS, DEFAULT_BUDGET, DEFAULT_MAX_DEGREE, STRATEGIES
from .fac_comm import format_sequence, format_word, parse_word
from .fac_config import FactorConfig
from .fac_exception import FactorClientError, FactorStructureError, FactorBudgetError
from .foundation import validate_handle
from .factorability import PhiMonoid, check_local_factorability, check_recognition_principle, \
    check_graded_equality, induced_rewriting_system
from .rewriting import reduce, FOLLOW, IRREDUCIBLE
from .indexseq import enumerate_small
from .morse import METHODS, visy_complex, bar_complex_truncated, homology
from .garside import ArtinMonoid, GarsideGroup, greedy_nf, group_nf, square_free_elements, \
    validate_gaussian_hypotheses, computation_rules_check
from .fixtures import fixture_names, fixture_spec, EXPORTABLE
from .spec_file import load_spec, load_coxeter_xml, dumps_spec, build_handle, build_garside
from .version import __version__

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _emit(lines):
    if not isinstance(lines, (list, tuple)):
        lines = [lines]
    for line in lines:
        sys.stdout.write(line + u'\n')


def _config(args):
    return FactorConfig(Radius=args.radius, Budget=args.budget, MaxDegree=args.max_degree, NumThreads=args.threads,
                        Strategy=getattr(args, 'strategy', None) or u'rightmost')


def _not_applicable(message):
    sys.stderr.write(u'error: {0}\n'.format(message))
    return EXIT_FAILURE


def _load(args, config):
    doc = load_coxeter_xml(args.spec) if getattr(args, 'xml', False) else load_spec(args.spec)
    return doc, build_handle(doc, config)


def cmd_check(args, config):
    doc, handle = _load(args, config)
    radius = config.get_radius()
    if isinstance(handle, ArtinMonoid):
        report = validate_gaussian_hypotheses(handle, min(radius, 3))
        if doc.get('kind') == 'garside':
            report.merge(computation_rules_check(build_garside(doc, config)), prefix=u'rules')
    elif isinstance(handle, PhiMonoid):
        report = check_local_factorability(handle.table)
    else:
        report = validate_handle(handle, radius)
        report.merge(check_recognition_principle(handle, radius))
        report.merge(check_graded_equality(handle, radius))
    _emit(report.to_text())
    return EXIT_OK if report.passed() else EXIT_FAILURE


def cmd_nf(args, config):
    _, handle = _load(args, config)
    x = handle.parse_element(args.word)
    _emit(format_word([handle.element_name(l) for l in handle.generator_word(x)]))
    return EXIT_OK


def cmd_rewrite(args, config):
    _, handle = _load(args, config)
    if not isinstance(handle, PhiMonoid):
        return _not_applicable('rewrite needs a phi-table or coxeter spec')
    system = induced_rewriting_system(handle.table)
    word = parse_word(args.word, system.alphabet)
    schedule = None
    if args.schedule:
        try:
            schedule = [int(p) for p in args.schedule.split(',')]
        except ValueError:
            raise FactorClientError('schedule must be a comma separated list of positions')
    strategy = FOLLOW if schedule else config.get_strategy()
    result = reduce(system, word, budget=config.get_budget(), strategy=strategy, positions=schedule)
    if args.trace:
        _emit(result.trace.lines())
    _emit(result.to_text())
    return EXIT_OK if result.outcome == IRREDUCIBLE else EXIT_FAILURE


def cmd_homology(args, config):
    _, handle = _load(args, config)
    degree = config.get_max_degree()
    if args.oracle == 'bar':
        complex = bar_complex_truncated(handle, degree, config.get_num_threads())
    else:
        complex = visy_complex(handle, degree, args.method, config.get_num_threads())
    _emit(homology(complex).to_lines())
    return EXIT_OK


def cmd_lambda(args, config):
    sequences = enumerate_small(args.n)
    _emit([format_sequence(seq) for seq in sequences])
    _emit(u'{0} sequences'.format(len(sequences)))
    return EXIT_OK


def cmd_garside_nf(args, config):
    _, handle = _load(args, config)
    letters = greedy_nf(handle, args.word)
    if not isinstance(handle, PhiMonoid):
        letters = [handle.element_name(l) for l in letters]
    _emit(format_word(letters))
    return EXIT_OK


def cmd_garside_group_nf(args, config):
    doc, _ = _load(args, config)
    group = GarsideGroup(build_garside(doc, config))
    g, word = group_nf(group, args.word)
    _emit([
        u'w = {0}'.format(group.monoid.element_name(g.word)),
        u'm = {0}'.format(g.power),
        u'nf = {0}'.format(format_word(word)),
        u'norm = {0}'.format(group.norm(g)),
    ])
    return EXIT_OK


def cmd_garside_structure(args, config):
    doc, _ = _load(args, config)
    structure = build_garside(doc, config)
    handle = structure.handle
    name = handle.element_name
    lines = [u'delta = {0}'.format(name(structure.delta)), u'divisors = {0}'.format(
        u', '.join(name(d) for d in structure.divisors))]
    for d in structure.divisors:
        lines.append(u'{0}: star = {1}, left star = {2}, phi = {3}'.format(
            name(d), name(structure.star(d)), name(structure.left_star(d)), name(structure.phi(d))))
    report = computation_rules_check(structure)
    lines.append(report.to_text())
    _emit(lines)
    return EXIT_OK if report.passed() else EXIT_FAILURE


def cmd_garside_qf(args, config):
    doc = load_coxeter_xml(args.spec) if args.xml else load_spec(args.spec)
    handle = build_handle(doc, config)
    if not isinstance(handle, ArtinMonoid):
        return _not_applicable('qf needs a coxeter spec')
    words = square_free_elements(handle.matrix, config.get_max_coxeter_order())
    _emit([format_word(w) for w in words])
    _emit(u'{0} square-free elements'.format(len(words)))
    return EXIT_OK


def cmd_fixtures_list(args, config):
    _emit([u'{0}{1}'.format(n, u'' if n in EXPORTABLE else u' (not exportable)') for n in fixture_names()])
    return EXIT_OK


def cmd_fixtures_export(args, config):
    text = dumps_spec(fixture_spec(args.name))
    if args.output:
        with io.open(args.output, 'w', encoding='utf-8') as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _spec_parser(sub, name, func, help, xml=True):
    p = sub.add_parser(name, help=help)
    p.add_argument('spec', help='monoid spec file (json)')
    if xml:
        p.add_argument('--xml', action='store_true', help='read a Coxeter matrix xml file instead of json')
    p.set_defaults(func=func)
    return p


def build_parser():
    parser = argparse.ArgumentParser(prog='factorable', description='factorable monoids toolkit')
    parser.add_argument('--version', action='version', version=__version__)
    parser.add_argument('-v', '--verbose', action='store_true', help='debug logging on stderr')
    parser.add_argument('--radius', type=int, default=DEFAULT_RADIUS, help='BFS radius for axiom checks')
    parser.add_argument('--budget', type=int, default=DEFAULT_BUDGET, help='rewriting and search budget')
    parser.add_argument('--max-degree', type=int, default=DEFAULT_MAX_DEGREE, help='top degree of the chain complex')
    parser.add_argument('--threads', type=int, default=1, help='threads for differential columns')
    sub = parser.add_subparsers(dest='command')

    _spec_parser(sub, 'check', cmd_check, 'check the factorability axioms of a spec')
    p = _spec_parser(sub, 'nf', cmd_nf, 'normal form of a word', xml=False)
    p.add_argument('word')
    p = _spec_parser(sub, 'rewrite', cmd_rewrite, 'rewrite a word with the induced rewriting system', xml=False)
    p.add_argument('word')
    p.add_argument('--strategy', choices=STRATEGIES, default=None)
    p.add_argument('--schedule', default=None, help='comma separated positions, e.g. 3,2,1,2')
    p.add_argument('--trace', action='store_true', help='print every rewriting step')
    p = _spec_parser(sub, 'homology', cmd_homology, 'integral homology via the Visy complex', xml=False)
    p.add_argument('--method', choices=METHODS, default='lambda')
    p.add_argument('--oracle', choices=('visy', 'bar'), default='visy')
    p = sub.add_parser('lambda', help='list the small index sequences')
    p.add_argument('n', type=int)
    p.set_defaults(func=cmd_lambda)

    garside = sub.add_parser('garside', help='Garside and Artin computations')
    gsub = garside.add_subparsers(dest='garside_command')
    p = _spec_parser(gsub, 'nf', cmd_garside_nf, 'greedy normal form of a positive word')
    p.add_argument('word')
    p = _spec_parser(gsub, 'group-nf', cmd_garside_group_nf, 'normal form in the group of fractions')
    p.add_argument('word')
    _spec_parser(gsub, 'structure', cmd_garside_structure, 'divisors of delta, star maps and phi')
    _spec_parser(gsub, 'qf', cmd_garside_qf, 'square-free elements of a Coxeter matrix')

    fixtures = sub.add_parser('fixtures', help='built-in example monoids')
    fsub = fixtures.add_subparsers(dest='fixtures_command')
    p = fsub.add_parser('list')
    p.set_defaults(func=cmd_fixtures_list)
    p = fsub.add_parser('export')
    p.add_argument('name')
    p.add_argument('-o', '--output', default=None)
    p.set_defaults(func=cmd_fixtures_export)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    if not hasattr(args, 'func'):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        config = _config(args)
        return args.func(args, config)
    except (FactorStructureError, FactorBudgetError) as e:
        sys.stderr.write(u'error: {0}\n'.format(e))
        return EXIT_FAILURE
    except FactorClientError as e:
        sys.stderr.write(u'error: {0}\n'.format(e))
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
