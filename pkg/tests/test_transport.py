import httpx
import pytest
from finrag.errors import (
    IntegrityError,
    TransportError
)
from finrag.transport import (
    HttpJsonClient,
    redact_headers
)

def _client(handler, max_retries=2, delays=None):
    return HttpJsonClient(
        base_url="https://models.test/v1/",
        api_key="secret",
        max_retries=max_retries,
        backoff_seconds=0.25,
        transport=httpx.MockTransport(handler),
        sleep=(delays.append if delays is not None else lambda seconds: None)
    )

def test_retries_transient_statuses_with_backoff():
    statuses = iter([503, 429, 200])
    delays = []

    def handler(request):
        status = next(statuses)
        return httpx.Response(status, json={"ok": status == 200})

    assert _client(handler, delays=delays).post_json("chat", {}) == {"ok": True}
    assert delays == [0.25, 0.5]

def test_gives_up_after_the_retry_budget():
    calls = []

    def handler(request):
        calls.append(request)
        return httpx.Response(500)

    with pytest.raises(TransportError) as info:
        _client(handler, max_retries=2).post_json("chat", {})
    assert len(calls) == 3
    assert "HTTP 500" in str(info.value)

def test_client_errors_fail_immediately():
    calls = []

    def handler(request):
        calls.append(request)
        return httpx.Response(401, text="bad key")

    with pytest.raises(TransportError):
        _client(handler).post_json("chat", {})
    assert len(calls) == 1

def test_connection_errors_are_retried():
    attempts = []

    def handler(request):
        attempts.append(request)
        if len(attempts) == 1:
            raise httpx.ConnectError("refused", request=request)
        return httpx.Response(200, json=[1, 2])

    assert _client(handler).post_json("embed", {"input": "x"}) == [1, 2]

def test_non_json_body_is_an_integrity_error():
    with pytest.raises(IntegrityError):
        _client(lambda request: httpx.Response(200, text="<html>")).post_json("chat", {})

def test_sends_bearer_token_to_joined_url():
    seen = []

    def handler(request):
        seen.append(request)
        return httpx.Response(200, json={})

    _client(handler).post_json("/chat/completions", {"a": 1})
    assert str(seen[0].url) == "https://models.test/v1/chat/completions"
    assert seen[0].headers["Authorization"] == "Bearer secret"

def test_redacts_credentials():
    assert redact_headers({"Authorization": "Bearer x", "Accept": "json"}) == {
        "Authorization": "***",
        "Accept": "json"
    }
