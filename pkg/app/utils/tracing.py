# Copyright 2025 The liar-game-lab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import logging
from collections.abc import Sequence
from typing import Any

from google.cloud import logging as google_cloud_logging
from opentelemetry.sdk.trace import ReadableSpan
from opentelemetry.sdk.trace.export import SpanExporter, SpanExportResult

from app.utils.config import SERVICE_NAME

# Attribute payloads above this many bytes are cut down before logging.
MAX_ATTRIBUTES_BYTES = 16 * 1024
MAX_ATTRIBUTE_CHARS = 512


class LoggingSpanExporter(SpanExporter):
    """
    Turns finished spans into structured log entries.

    With a Google Cloud Logging client every span becomes one `log_struct`
    entry; without one the same payload is written as JSON to the stdlib
    logger at DEBUG level. Oversized attribute payloads (long lists of
    optimal queries, for example) are truncated and marked.
    """

    def __init__(
        self,
        logging_client: google_cloud_logging.Client | None = None,
        debug: bool = False,
    ) -> None:
        """
        :param logging_client: Google Cloud Logging client, or None for stdlib logging
        :param debug: Also log a one-line span summary at INFO
        """
        self.debug = debug
        self.logging_client = logging_client
        self.logger = logging_client.logger(__name__) if logging_client else None

    def export(self, spans: Sequence[ReadableSpan]) -> SpanExportResult:
        for span in spans:
            span_context = span.get_span_context()
            span_dict = json.loads(span.to_json())
            span_dict["trace_id"] = format(span_context.trace_id, "x")
            span_dict["span_id"] = format(span_context.span_id, "x")
            span_dict = self._process_large_attributes(span_dict)

            if self.logger is not None:
                self.logger.log_struct(
                    span_dict,
                    labels={"type": "solver_telemetry", "service_name": SERVICE_NAME},
                    severity="INFO",
                )
            else:
                logging.debug(json.dumps(span_dict, sort_keys=True))
            if self.debug:
                logging.info(f"span {span_dict['name']}: {span_dict.get('attributes')}")
        return SpanExportResult.SUCCESS

    def shutdown(self) -> None:
        self.logger = None

    def _process_large_attributes(self, span_dict: dict[str, Any]) -> dict[str, Any]:
        """Truncates string attributes when the payload exceeds the size limit."""
        attributes = span_dict.get("attributes") or {}
        if len(json.dumps(attributes).encode()) <= MAX_ATTRIBUTES_BYTES:
            return span_dict
        retained: dict[str, Any] = {}
        for key, value in attributes.items():
            text = value if isinstance(value, str) else json.dumps(value)
            if len(text) > MAX_ATTRIBUTE_CHARS:
                retained[key] = text[:MAX_ATTRIBUTE_CHARS]
            else:
                retained[key] = value
        retained["truncated"] = True
        span_dict["attributes"] = retained
        logging.info(
            f"Span {span_dict.get('name')} attributes above {MAX_ATTRIBUTES_BYTES} bytes, truncated"
        )
        return span_dict
