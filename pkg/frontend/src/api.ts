import type {
  ApiErrorBody,
  FormConfig,
  FormStructure,
  OntologyDetail,
  OntologySummary,
  PopulationOutcome,
  Submission,
} from "./types.js";

export class ApiError extends Error {
  readonly status: number;
  readonly code: string;
  readonly detail?: Record<string, unknown>;

  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.status = status;
    this.code = body.code;
    this.detail = body.detail;
  }
}

declare global {
  // Injected by the host page or the test environment.
  // eslint-disable-next-line no-var
  var ONTOFORMS_API_URL: string | undefined;
}

export function defaultBaseUrl(): string {
  if (typeof globalThis.ONTOFORMS_API_URL === "string") {
    return globalThis.ONTOFORMS_API_URL;
  }
  return "http://127.0.0.1:8000";
}

export class ApiClient {
  constructor(readonly baseUrl: string = defaultBaseUrl()) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    if (!response.ok) {
      let body: ApiErrorBody;
      try {
        body = (await response.json()) as ApiErrorBody;
      } catch {
        body = { code: "unknown", message: response.statusText };
      }
      throw new ApiError(response.status, body);
    }
    const text = await response.text();
    return (text === "" ? undefined : JSON.parse(text)) as T;
  }

  uploadOntology(name: string, turtle: string): Promise<OntologySummary> {
    return this.request("/ontologies", {
      method: "POST",
      body: JSON.stringify({ name, turtle }),
    });
  }

  listOntologies(): Promise<OntologySummary[]> {
    return this.request("/ontologies");
  }

  ontologyDetail(id: string): Promise<OntologyDetail> {
    return this.request(`/ontologies/${encodeURIComponent(id)}`);
  }

  formFor(id: string, classIri: string): Promise<FormStructure> {
    const cls = encodeURIComponent(classIri);
    return this.request(`/ontologies/${encodeURIComponent(id)}/form?class=${cls}`);
  }

  getConfig(id: string): Promise<FormConfig> {
    return this.request(`/ontologies/${encodeURIComponent(id)}/config`);
  }

  putConfig(id: string, config: FormConfig): Promise<FormConfig> {
    return this.request(`/ontologies/${encodeURIComponent(id)}/config`, {
      method: "PUT",
      body: JSON.stringify(config),
    });
  }

  createIndividual(id: string, submission: Submission): Promise<PopulationOutcome> {
    return this.request(`/ontologies/${encodeURIComponent(id)}/individuals`, {
      method: "POST",
      body: JSON.stringify(submission),
    });
  }

  readIndividual(id: string, iri: string, classIri?: string): Promise<Submission> {
    const suffix = classIri ? `?class=${encodeURIComponent(classIri)}` : "";
    return this.request(
      `/ontologies/${encodeURIComponent(id)}/individuals/${encodeURIComponent(iri)}${suffix}`,
    );
  }

  updateIndividual(
    id: string,
    iri: string,
    submission: Submission,
    classIri?: string,
  ): Promise<PopulationOutcome> {
    const suffix = classIri ? `?class=${encodeURIComponent(classIri)}` : "";
    return this.request(
      `/ontologies/${encodeURIComponent(id)}/individuals/${encodeURIComponent(iri)}${suffix}`,
      { method: "PUT", body: JSON.stringify(submission) },
    );
  }

  exportTurtle(id: string): Promise<string> {
    return fetch(`${this.baseUrl}/ontologies/${encodeURIComponent(id)}/export`)
      .then(async (response) => {
        if (!response.ok) {
          throw new ApiError(response.status, {
            code: "export-failed",
            message: response.statusText,
          });
        }
        return response.text();
      });
  }
}
