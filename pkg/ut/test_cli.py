# -*- coding=utf-8
import io

from factorable.cli import main, EXIT_OK, EXIT_FAILURE, EXIT_USAGE


def _export(tmp_path, name):
    path = str(tmp_path / (name + '.json'))
    assert main(['fixtures', 'export', name, '-o', path]) == EXIT_OK
    return path


def _out_lines(capsys):
    return capsys.readouterr().out.splitlines()


def test_lambda(capsys):
    assert main(['lambda', '2']) == EXIT_OK
    assert _out_lines(capsys) == [u'()', u'(1)', u'(2)', u'(1,2)', u'(2,1)', u'(1,2,1)', u'6 sequences']


def test_homology_of_exported_z2(tmp_path, capsys):
    """导出z2后计算同调"""
    path = _export(tmp_path, 'z2')
    capsys.readouterr()
    assert main(['homology', path]) == EXIT_OK
    assert _out_lines(capsys) == [u'H_0 = Z', u'H_1 = Z/2', u'H_2 = 0', u'H_3 = Z/2']
    assert main(['homology', path, '--oracle', 'bar']) == EXIT_OK
    assert _out_lines(capsys) == [u'H_0 = Z', u'H_1 = Z/2', u'H_2 = 0', u'H_3 = Z/2']


def test_nf_and_check(tmp_path, capsys):
    path = _export(tmp_path, 'appendix')
    capsys.readouterr()
    assert main(['nf', path, 'a2 b3']) == EXIT_OK
    assert _out_lines(capsys) == [u'e2']
    assert main(['check', path]) == EXIT_OK
    assert _out_lines(capsys)[0].endswith(u'PASS')


def test_rewrite_cycle(tmp_path, capsys):
    """按位置表重写出现环, 退出码为1"""
    path = _export(tmp_path, 'appendix')
    capsys.readouterr()
    code = main(['rewrite', path, 'a1 b1 c1 d1', '--schedule', '3,2,1,2', '--trace'])
    assert code == EXIT_FAILURE
    lines = _out_lines(capsys)
    assert len(lines) == 9
    assert lines[0].startswith(u'pos=3 ')
    assert lines[-1] == u'CycleFound(a1 b1 c1 d1, 8 steps)'


def test_rewrite_bad_schedule(tmp_path):
    path = _export(tmp_path, 'appendix')
    assert main(['rewrite', path, 'a1 b1', '--schedule', '1,x']) == EXIT_USAGE


def test_garside_commands(tmp_path, capsys):
    path = _export(tmp_path, 'b3')
    capsys.readouterr()
    assert main(['garside', 'nf', path, 'abab']) == EXIT_OK
    assert _out_lines(capsys) == [u'a aba']
    assert main(['garside', 'group-nf', path, 'a aba^-1']) == EXIT_OK
    assert _out_lines(capsys) == [u'w = a', u'm = 1', u'nf = ab^-1', u'norm = 1']
    assert main(['garside', 'qf', path]) == EXIT_OK
    assert _out_lines(capsys)[-1] == u'5 square-free elements'
    assert main(['garside', 'structure', path]) == EXIT_OK
    lines = _out_lines(capsys)
    assert lines[0] == u'delta = aba'
    assert lines[1] == u'divisors = a, b, ab, ba, aba'


def test_garside_xml(tmp_path, capsys):
    path = str(tmp_path / 'a2.xml')
    with io.open(path, 'w', encoding='utf-8') as f:
        f.write(u'<CoxeterMatrix><Generator>a</Generator><Generator>b</Generator>'
                u'<Edge s="a" t="b" m="3"></Edge></CoxeterMatrix>')
    assert main(['garside', 'qf', path, '--xml']) == EXIT_OK
    assert _out_lines(capsys)[-1] == u'5 square-free elements'


def test_not_applicable(tmp_path, capsys):
    """z2没有φ表也不是Artin幺半群"""
    path = _export(tmp_path, 'z2')
    assert main(['garside', 'qf', path]) == EXIT_FAILURE
    assert main(['rewrite', path, 't t']) == EXIT_FAILURE
    assert u'error:' in capsys.readouterr().err


def test_usage_errors(tmp_path, capsys):
    bad = str(tmp_path / 'bad.json')
    with io.open(bad, 'w', encoding='utf-8') as f:
        f.write(u'{"kind": ')
    assert main(['check', bad]) == EXIT_USAGE
    assert main(['check', str(tmp_path / 'missing.json')]) == EXIT_USAGE
    assert main([]) == EXIT_USAGE
    assert main(['lambda']) == EXIT_USAGE
    assert main(['fixtures', 'export', 'nope']) == EXIT_USAGE
    assert main(['--version']) == EXIT_OK


def test_fixtures_list(capsys):
    assert main(['fixtures', 'list']) == EXIT_OK
    lines = _out_lines(capsys)
    assert lines[0] == u'appendix'
    assert u'trivial (not exportable)' in lines


def test_homology_generic_method(tmp_path, capsys):
    """一般Morse公式给出与λ公式相同的同调"""
    path = _export(tmp_path, 'free_abelian')
    capsys.readouterr()
    assert main(['--max-degree', '3', 'homology', path, '--method', 'generic']) == EXIT_OK
    generic = _out_lines(capsys)
    assert generic == [u'H_0 = Z', u'H_1 = Z^2', u'H_2 = Z']
    assert main(['--max-degree', '3', 'homology', path]) == EXIT_OK
    assert _out_lines(capsys) == generic


def test_output_is_deterministic(tmp_path, capsys):
    """每个命令运行两次, 输出逐字节相同"""
    z2_path = _export(tmp_path, 'z2')
    appendix = _export(tmp_path, 'appendix')
    b3 = _export(tmp_path, 'b3')
    capsys.readouterr()
    commands = [
        ['lambda', '3'],
        ['fixtures', 'list'],
        ['fixtures', 'export', 's3'],
        ['check', z2_path],
        ['check', appendix],
        ['check', b3],
        ['homology', z2_path, '--method', 'coherent'],
        ['--max-degree', '3', 'homology', b3, '--method', 'generic'],
        ['nf', appendix, 'a1 b1 c1 d1'],
        ['rewrite', appendix, 'a1 b1 c1 d1', '--schedule', '3,2,1,2', '--trace'],
        ['rewrite', b3, 'a b a b a b', '--trace'],
        ['garside', 'nf', b3, 'abab'],
        ['garside', 'group-nf', b3, 'a^-1 b aba^-1'],
        ['garside', 'structure', b3],
        ['garside', 'qf', b3],
    ]
    for argv in commands:
        first_code = main(argv)
        first = capsys.readouterr().out.encode('utf-8')
        assert main(argv) == first_code
        assert capsys.readouterr().out.encode('utf-8') == first, argv
        assert first
