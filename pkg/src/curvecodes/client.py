"""Thin client over the service API.

Without a server URL the client mounts the FastAPI application on an
in-process ASGI transport, so the CLI exercises the exact service contract
without opening any network socket. With a URL it posts to a remote
instance instead.
"""
from __future__ import annotations

import asyncio

import httpx


class ServiceError(Exception):
    """Domain error reported by the service (HTTP 400)."""

    def __init__(self, error_type: str, message: str):
        super().__init__(message)
        self.error_type = error_type


class UsageError(Exception):
    """Request the service could not even validate (HTTP 422)."""


class ServiceClient:
    def __init__(self, base_url: str | None = None, timeout: float = 3600.0):
        self.base_url = base_url
        self.timeout = timeout

    def call(self, path: str, payload: dict | None = None) -> dict:
        if self.base_url is not None:
            with httpx.Client(base_url=self.base_url, timeout=self.timeout) as client:
                resp = client.post(path, json=payload if payload is not None else {})
            return self._unwrap(resp)
        return asyncio.run(self._call_inprocess(path, payload))

    def get(self, path: str) -> dict:
        if self.base_url is not None:
            with httpx.Client(base_url=self.base_url, timeout=self.timeout) as client:
                return self._unwrap(client.get(path))
        return asyncio.run(self._call_inprocess(path, None, method="GET"))

    async def _call_inprocess(self, path: str, payload, method: str = "POST") -> dict:
        from .service import app

        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://curvecodes.local", timeout=self.timeout
        ) as client:
            if method == "GET":
                resp = await client.get(path)
            else:
                resp = await client.post(path, json=payload if payload is not None else {})
        return self._unwrap(resp)

    @staticmethod
    def _unwrap(resp: httpx.Response) -> dict:
        if resp.status_code == 400:
            err = resp.json().get("error", {})
            raise ServiceError(err.get("type", "DomainError"), err.get("message", ""))
        if resp.status_code == 422:
            raise UsageError(resp.text)
        resp.raise_for_status()
        return resp.json()
