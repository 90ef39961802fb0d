# -*- coding: utf-8 -*-
"""Distribution runtime."""
import json

import pytest

from mookit.distrib.deployment import FAILURE_MARKER, Deployment, Manifest, load_manifest
from mookit.distrib.policy import LOCAL, PlacementPolicy
from mookit.distrib.registry import Registry, export_object
from mookit.interface import check_equiv, explain, run_dist, transform
from mookit.runtime.interpreter import PROXY_HANDLE
from mookit.runtime.values import Obj
from mookit.utilities.exceptions import (ManifestError, MarshalError, RemoteError, TransportError,
                                         UnknownObject)
from mookit.utilities.warnings import ManifestWarning

from conftest import corpus, manifest

SHARED = ['running_example', 'sharing', 'static_counter', 'linked_list', 'mutual_recursion',
          'inheritance', 'bank', 'callbacks', 'clinit_probe']

NODES = {'n1': '127.0.0.1:0', 'n2': '127.0.0.1:0', 'n3': '127.0.0.1:0'}


def deploy(name, data):
    """Deployment of a bundled program."""
    checked = transform(corpus(name)).checked
    return Deployment(load_manifest(data), checked, source=corpus(name))


def all_local(name):
    return {'nodes': NODES}


def all_on_n2(name):
    classes = explain(corpus(name)).transformable
    return {'nodes': NODES, 'placement': {cls: 'n2' for cls in classes}}


def split(name):
    classes = explain(corpus(name)).transformable
    return {'nodes': NODES,
            'placement': {cls: 'n3' for cls in classes},
            'statics': {cls: 'n2' for cls in classes}}


@pytest.mark.parametrize('policy', [all_local, all_on_n2, split])
@pytest.mark.parametrize('name', SHARED)
def test_policies_preserve_traces(name, policy):
    result = check_equiv(corpus(name), manifest=policy(name))
    assert result.equal, result.diff
    assert result.distributed == result.original


@pytest.mark.parametrize('name', SHARED)
def test_tcp_preserves_traces(name):
    data = dict(split(name), transport='tcp', timeout=20)
    result = check_equiv(corpus(name), manifest=data)
    assert result.equal, result.diff


def test_bundled_manifests():
    assert run_dist(corpus('running_example'), manifest('running_example')) == ['6', '6', '41']
    assert run_dist(corpus('sharing'), manifest('tcp')) == ['12', '12', 'true']
    assert run_dist(corpus('sharing'), manifest('two_nodes')) == ['12', '12', 'true']
    assert run_dist(corpus('sharing'), manifest('local')) == ['12', '12', 'true']


def test_shared_object_lives_once():
    with deploy('sharing', manifest('sharing')) as deployment:
        assert deployment.run() == ['12', '12', 'true']
        assert len(deployment.nodes['n2'].instances('C')) == 1
        assert deployment.nodes['n1'].instances('C') == []


def test_shared_object_over_tcp():
    with deploy('sharing', manifest('tcp')) as deployment:
        assert deployment.run() == ['12', '12', 'true']
        assert len(deployment.nodes['n2'].instances('C')) == 1
        assert len(deployment.nodes['n3'].instances('B')) == 1


def test_remote_placement_binds_proxies():
    with deploy('running_example', split('running_example')) as deployment:
        node = deployment.entry
        made = node.hooks.policy_create(node.interp, 'Y')
        assert made.cls == 'Y_O_Proxy_RAF'
        assert made.fields[PROXY_HANDLE].node == 'n3'
        assert len(deployment.nodes['n3'].instances('Y')) == 1

        found = node.hooks.policy_discover(node.interp, 'Y')
        assert found.cls == 'Y_C_Proxy_RAF'
        assert found.fields[PROXY_HANDLE].node == 'n2'
        assert node.hooks.policy_discover(node.interp, 'Y') is found
        # the same reference bound as an instance gets its own proxy
        assert node.hooks.bind(node.interp, found.fields[PROXY_HANDLE]).cls == 'Y_O_Proxy_RAF'


def test_static_counter_two_clients():
    expected = ['one got 1', 'one got 2', 'two got 3', 'two got 4', 'two got 5', 'one got 6', '6']
    with deploy('static_counter', manifest('static_counter')) as deployment:
        assert deployment.run() == expected
        assert len(deployment.nodes['n3'].instances('Client')) == 2
        counter = deployment.nodes['n2'].registry.statics['Counter']
        assert counter.fields['count'] == 6


def test_static_init_once_remote():
    with deploy('clinit_probe', split('clinit_probe')) as deployment:
        assert deployment.run() == ['14', '14', '7', '1']


def test_killed_node():
    with deploy('sharing', manifest('sharing')) as deployment:
        deployment.kill('n2')
        with pytest.raises(TransportError):
            deployment.run()
        trace = deployment.entry.trace
        assert trace[-1].startswith(FAILURE_MARKER)


def test_run_dist_writes_trace(tmp_path):
    path = tmp_path / 'trace.txt'
    run_dist(corpus('sharing'), manifest('sharing'), path)
    assert path.read_text() == '12\n12\ntrue\n'


def test_checkpoint_moves_placement():
    with deploy('checkpoint', manifest('checkpoint')) as deployment:
        assert deployment.run() == ['6', '10']
        assert len(deployment.nodes['n2'].instances('Box')) == 1
        assert deployment.policy.version == 2
        assert deployment.policy.location('Box') == LOCAL


def test_remote_error(tmp_path):
    source = tmp_path / 'divide.moo'
    source.write_text('''
        class Div {
            int by(int v) { return 10 / v; }
        }
        class Main {
            public static void main() {
                Div d = new Div();
                print(d.by(5));
                print(d.by(0));
            }
        }
    ''')
    with pytest.raises(RemoteError, match='division by zero'):
        run_dist(source, {'nodes': NODES, 'placement': {'Div': 'n2'}})


def test_marshal_error(tmp_path):
    source = tmp_path / 'marshal.moo'
    source.write_text('''
        builtin class Text {
            Text();
            void append(string s);
        }
        class Holder {
            Text text;
            void keep(Text t) { text = t; }
        }
        class Main {
            public static void main() {
                Holder h = new Holder();
                h.keep(new Text());
            }
        }
    ''')
    with pytest.raises(MarshalError):
        run_dist(source, {'nodes': NODES, 'placement': {'Holder': 'n2'}})


##############################################################################
# Registry and policy.
##############################################################################

def test_registry():
    registry = Registry('n1')
    first, second = Obj('C_O_Local'), Obj('C_O_Local')
    ref = registry.export(first)
    assert (ref.node, ref.oid, ref.cls) == ('n1', 1, 'C')
    assert registry.export(first) == ref
    assert export_object(registry, first) == ref
    assert registry.export(second).oid == 2
    assert registry.resolve(2) is second
    assert len(registry) == 2
    with pytest.raises(UnknownObject):
        registry.resolve(3)


def test_registry_statics():
    registry = Registry('n2')
    single = Obj('C_C_Local')
    ref = registry.export_static('C', single)
    assert registry.export_static('C', Obj('C_C_Local')) == ref
    assert registry.instances('C') == []
    obj = Obj('C_O_Local')
    registry.export(obj)
    assert registry.instances('C') == [obj]


def test_policy():
    policy = PlacementPolicy('n1', {'A': 'n2'}, {'B': 'n3'})
    assert policy.location('A') == 'n2'
    assert policy.location('B') == LOCAL
    assert policy.statics_home('B') == 'n3'
    assert policy.statics_home('A') == 'n1'
    assert policy.update({'B': 'n2'}) == 1
    assert policy.location('B') == 'n2'
    assert policy.replace({'C': 'n3'}) == 2
    assert policy.location('A') == LOCAL
    assert policy.location('C') == 'n3'


##############################################################################
# Manifests.
##############################################################################

def test_manifest_defaults():
    loaded = load_manifest({'nodes': {'a': 'localhost:7000', 'b': ':7001'}})
    assert loaded.entry == 'a'
    assert loaded.transport == 'loopback'
    assert loaded.mode == 'thread'
    assert loaded.protocol == 'RAF'
    assert loaded.placement == {} and loaded.statics == {} and loaded.checkpoints == {}
    assert loaded.path is None


def test_manifest_file():
    loaded = load_manifest(manifest('checkpoint'))
    assert loaded.checkpoints == {1: {'Box': 'n2'}, 2: {'Box': 'local'}}
    assert loaded.path == manifest('checkpoint')
    assert load_manifest(open(manifest('checkpoint'), 'rb').read()).checkpoints == loaded.checkpoints


def test_manifest_local():
    local = Manifest.local()
    assert local.nodes == {'n1': '127.0.0.1:0'}
    assert local.entry == 'n1'


@pytest.mark.parametrize('data', [
    {},
    {'nodes': {}},
    {'nodes': ['n1']},
    {'nodes': {'n1': 7000}},
    {'nodes': {'n1': 'localhost'}},
    {'nodes': {'n1': ':0'}, 'entry': 'n2'},
    {'nodes': {'n1': ':0'}, 'transport': 'udp'},
    {'nodes': {'n1': ':0'}, 'mode': 'process'},
    {'nodes': {'n1': ':0'}, 'mode': 'fork', 'transport': 'tcp'},
    {'nodes': {'n1': ':0'}, 'protocol': 1},
    {'nodes': {'n1': ':0'}, 'placement': {'A': 'n9'}},
    {'nodes': {'n1': ':0'}, 'placement': ['A']},
    {'nodes': {'n1': ':0'}, 'statics': {'A': 'local'}},
    {'nodes': {'n1': ':0'}, 'checkpoints': {'one': {}}},
    {'nodes': {'n1': ':0'}, 'checkpoints': {'1': {'A': 'n9'}}},
    {'nodes': {'n1': ':0'}, 'timeout': 0},
    {'nodes': {'n1': ':0'}, 'timeout': True},
    [],
])
def test_manifest_errors(data):
    with pytest.raises(ManifestError):
        load_manifest(data)


def test_manifest_unreadable(tmp_path):
    with pytest.raises(ManifestError):
        load_manifest(str(tmp_path / 'missing.json'))
    with pytest.raises(ManifestError):
        load_manifest(b'{"nodes": ')


def test_manifest_warnings():
    with pytest.warns(ManifestWarning, match='unknown manifest key'):
        load_manifest({'nodes': {'n1': ':0'}, 'colour': 'blue'})

    checked = transform(corpus('native')).checked
    with pytest.warns(ManifestWarning, match='not transformed'):
        deployment = Deployment(load_manifest({'nodes': NODES, 'placement': {'Native': 'n2', 'Calc': 'n2'}}),
                                checked)
    assert deployment.policy.placement == {'Calc': 'n2'}


def test_reload(tmp_path):
    path = tmp_path / 'manifest.json'
    path.write_text(json.dumps({'nodes': NODES, 'placement': {'C': 'n2'}}))
    deployment = deploy('sharing', str(path))
    assert deployment.policy.location('C') == 'n2'

    path.write_text(json.dumps({'nodes': NODES, 'placement': {'C': 'n3'}}))
    deployment.reload()
    assert deployment.policy.location('C') == 'n3'
    assert deployment.manifest.placement == {'C': 'n3'}

    path.write_text(json.dumps({'nodes': NODES, 'statics': {'C': 'n2'}}))
    with pytest.warns(ManifestWarning):
        deployment.reload()
    assert deployment.policy.statics_home('C') == 'n1'
    assert deployment.policy.location('C') == LOCAL


def test_reload_needs_file():
    deployment = deploy('sharing', manifest('sharing'))
    deployment.manifest = deployment.manifest._replace(path=None)
    with pytest.raises(ManifestError):
        deployment.reload()


def test_serve_rejects():
    deployment = deploy('sharing', manifest('sharing'))
    with pytest.raises(ManifestError):
        deployment.serve('n2')
    deployment = deploy('sharing', manifest('tcp'))
    with pytest.raises(ManifestError):
        deployment.serve('n1')


def test_kill_before_start():
    deployment = deploy('sharing', manifest('sharing'))
    with pytest.raises(TransportError):
        deployment.kill('n2')
