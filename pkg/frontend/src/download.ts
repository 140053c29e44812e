/** File downloads.
 *
 * CSV downloads wrap the byte stream exactly as it arrived from the
 * service; no parsing or re-serialisation sits between the response and
 * the saved file. PNG snapshots are produced locally from the canvas.
 */

export function csvBlob(bytes: Uint8Array): Blob {
  return new Blob([bytes.buffer.slice(bytes.byteOffset, bytes.byteOffset + bytes.byteLength) as ArrayBuffer], {
    type: "text/csv",
  });
}

function triggerDownload(blob: Blob, filename: string): void {
  const url = URL.createObjectURL(blob);
  const anchor = document.createElement("a");
  anchor.href = url;
  anchor.download = filename;
  document.body.appendChild(anchor);
  anchor.click();
  anchor.remove();
  URL.revokeObjectURL(url);
}

export function downloadCsv(bytes: Uint8Array, filename: string): void {
  triggerDownload(csvBlob(bytes), filename);
}

export function downloadPng(canvas: HTMLCanvasElement, filename: string): Promise<void> {
  return new Promise((resolve, reject) => {
    canvas.toBlob((blob) => {
      if (blob === null) {
        reject(new Error("canvas refused to produce an image"));
        return;
      }
      triggerDownload(blob, filename);
      resolve();
    }, "image/png");
  });
}
